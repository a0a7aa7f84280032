#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

enum class ExecMode { sequential, distributed_sim };
enum class IsolatedPolicy { error, include_in_solution };

std::string to_string(ExecMode mode);
ExecMode exec_mode_from_string(std::string_view s);

struct RunConfig {
  std::uint64_t seed = 1;
  unsigned m = 0;  // refinement rounds
  ExecMode mode = ExecMode::sequential;
  IsolatedPolicy isolated = IsolatedPolicy::error;
};

struct MessageTrace {
  std::vector<std::uint64_t> per_round;
  std::uint64_t total() const;
};

struct Solution {
  std::vector<NodeId> marked;  // sorted ascending
  unsigned m_used = 0;
  unsigned k_used = 1;
  std::uint64_t seed = 0;
  unsigned rounds = 0;
  std::uint64_t messages = 0;  // 0 in sequential mode
  double elapsed_s = 0.0;
  ExecMode mode = ExecMode::sequential;

  std::size_t size() const { return marked.size(); }
  bool contains(NodeId v) const;
};

namespace detail {

// Larger (weight, id) wins; the id component restores a total order when
// finite-precision weights collide.
inline bool weight_less(double wa, NodeId a, double wb, NodeId b) {
  return wa < wb || (wa == wb && a < b);
}

// Neighborhood provider concept shared by the base engine and the
// k-distance extension:
//   std::uint32_t size() const;
//   std::uint64_t degree(NodeId v) const;          // |N(v)|
//   for_neighbors(NodeId v, F f) const;            // f(u) per neighbor
template <class P>
std::vector<NodeId> mark_from_weights(const P& p,
                                      std::span<const double> w) {
  const std::uint32_t n = p.size();
  std::vector<NodeId> choice(n, kInvalidNode);
  for (NodeId v = 0; v < n; ++v) {
    NodeId best = kInvalidNode;
    double best_w = 0.0;
    p.for_neighbors(v, [&](NodeId u) {
      if (best == kInvalidNode || weight_less(best_w, best, w[u], u)) {
        best = u;
        best_w = w[u];
      }
    });
    choice[v] = best;
  }
  return choice;
}

std::vector<std::uint32_t> mark_counts(std::uint32_t n,
                                       std::span<const NodeId> choices);

template <class P>
std::vector<NodeId> run_rounds_sequential(const P& p,
                                          std::span<const double> tags,
                                          unsigned m) {
  const std::uint32_t n = p.size();
  std::vector<double> w(n);
  for (NodeId v = 0; v < n; ++v)
    w[v] = static_cast<double>(p.degree(v)) + tags[v];
  std::vector<NodeId> choice = mark_from_weights(p, w);
  for (unsigned round = 0; round < m; ++round) {
    auto x = mark_counts(n, choice);
    for (NodeId v = 0; v < n; ++v)
      w[v] = static_cast<double>(x[v]) + tags[v];
    choice = mark_from_weights(p, w);
  }
  return choice;
}

struct SimOutcome {
  std::vector<NodeId> choices;
  std::vector<std::uint64_t> messages_per_round;
};

// Synchronous message-passing execution. State flows between rounds only
// through outbox -> inbox arrays; each node's compute step reads its own
// inbox slice, its neighbor ids, and its local (tag, mark count) state.
template <class P>
SimOutcome simulate_core(const P& p, std::span<const double> tags,
                         unsigned m) {
  const std::uint32_t n = p.size();
  std::vector<std::uint64_t> off(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) off[v + 1] = off[v] + p.degree(v);
  const std::uint64_t links = off[n];

  std::vector<double> outbox(n), inbox(links);
  std::vector<std::uint32_t> marks_inbox(n, 0);
  SimOutcome out;

  auto deliver_weights = [&]() {
    for (NodeId v = 0; v < n; ++v) {
      std::uint64_t idx = off[v];
      p.for_neighbors(v, [&](NodeId u) { inbox[idx++] = outbox[u]; });
    }
  };
  auto choose_from_inbox = [&]() {
    std::vector<NodeId> choice(n, kInvalidNode);
    for (NodeId v = 0; v < n; ++v) {
      std::uint64_t idx = off[v];
      NodeId best = kInvalidNode;
      double best_w = 0.0;
      p.for_neighbors(v, [&](NodeId u) {
        double wu = inbox[idx++];
        if (best == kInvalidNode || weight_less(best_w, best, wu, u)) {
          best = u;
          best_w = wu;
        }
      });
      choice[v] = best;
    }
    return choice;
  };
  auto deliver_marks = [&](const std::vector<NodeId>& choice) {
    std::fill(marks_inbox.begin(), marks_inbox.end(), 0);
    std::uint64_t sent = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (choice[v] != kInvalidNode) {
        ++marks_inbox[choice[v]];
        ++sent;
      }
    }
    return sent;
  };

  // Round 1: every node announces w = deg + tag to all neighbors.
  for (NodeId v = 0; v < n; ++v)
    outbox[v] = static_cast<double>(p.degree(v)) + tags[v];
  deliver_weights();
  out.messages_per_round.push_back(links);

  // Round 2: mark the max-weight neighbor; tell it.
  std::vector<NodeId> choice = choose_from_inbox();
  out.messages_per_round.push_back(deliver_marks(choice));

  // Refinement rounds: weight from received marks, re-announce, re-mark.
  for (unsigned round = 0; round < m; ++round) {
    for (NodeId v = 0; v < n; ++v)
      outbox[v] = static_cast<double>(marks_inbox[v]) + tags[v];
    deliver_weights();
    std::uint64_t msgs = links;
    choice = choose_from_inbox();
    msgs += deliver_marks(choice);
    out.messages_per_round.push_back(msgs);
  }

  out.choices = std::move(choice);
  return out;
}

struct AdjacencyProvider {
  const Graph* g;
  std::uint32_t size() const { return g->node_count(); }
  std::uint64_t degree(NodeId v) const { return g->degree(v); }
  template <class F>
  void for_neighbors(NodeId v, F&& f) const {
    for (NodeId u : g->neighbors(v)) f(u);
  }
};

// Shared solve plumbing used by the base engine and the k-distance module.
std::vector<NodeId> collect_marked(std::span<const NodeId> choices,
                                   std::span<const NodeId> isolated,
                                   IsolatedPolicy policy);
void require_no_isolated_or_policy(const Graph& g,
                                   std::span<const NodeId> isolated,
                                   IsolatedPolicy policy);

}  // namespace detail

/// Tag map r_v in (0,1) for every node, keyed by (seed, id).
std::vector<double> assign_tags(const Graph& g, std::uint64_t seed);

/// Each node marks its maximum-weight neighbor under the given weights
/// (ties: larger id). Isolated nodes map to kInvalidNode.
std::vector<NodeId> mark_neighbors(const Graph& g,
                                   std::span<const double> weights);

/// First marking pass: weights are degree + tag.
std::vector<NodeId> initial_mark(const Graph& g, std::span<const double> tags);

/// One refinement pass: count how often each node was marked in
/// `prev_choices`, reweight as count + tag, drop all marks, re-mark.
std::vector<NodeId> refine_round(const Graph& g, std::span<const double> tags,
                                 std::span<const NodeId> prev_choices);

/// Runs the full marking algorithm (initial mark + m refinement rounds).
/// The marked set is the image of the final choice map, plus isolated
/// vertices when the policy includes them.
Solution solve(const Graph& g, const RunConfig& cfg);

struct SimResult {
  Solution solution;
  MessageTrace trace;
};

/// Synchronous-round simulation; requires cfg.mode == distributed_sim.
/// The marked set is identical to the sequential solve for the same seed.
SimResult simulate_rounds(const Graph& g, const RunConfig& cfg);

}  // namespace domset
