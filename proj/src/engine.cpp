#include "domset/engine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "domset/rng.hpp"

namespace domset {

std::string to_string(ExecMode mode) {
  return mode == ExecMode::sequential ? "seq" : "sim";
}

ExecMode exec_mode_from_string(std::string_view s) {
  if (s == "seq" || s == "sequential") return ExecMode::sequential;
  if (s == "sim" || s == "distributed-sim") return ExecMode::distributed_sim;
  throw std::invalid_argument("unknown execution mode '" + std::string(s) +
                              "'");
}

std::uint64_t MessageTrace::total() const {
  return std::accumulate(per_round.begin(), per_round.end(),
                         std::uint64_t{0});
}

bool Solution::contains(NodeId v) const {
  return std::binary_search(marked.begin(), marked.end(), v);
}

namespace detail {

std::vector<std::uint32_t> mark_counts(std::uint32_t n,
                                       std::span<const NodeId> choices) {
  std::vector<std::uint32_t> x(n, 0);
  for (NodeId c : choices)
    if (c != kInvalidNode) ++x[c];
  return x;
}

std::vector<NodeId> collect_marked(std::span<const NodeId> choices,
                                   std::span<const NodeId> isolated,
                                   IsolatedPolicy policy) {
  std::vector<NodeId> marked(choices.begin(), choices.end());
  std::erase(marked, kInvalidNode);
  if (policy == IsolatedPolicy::include_in_solution)
    marked.insert(marked.end(), isolated.begin(), isolated.end());
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  return marked;
}

void require_no_isolated_or_policy(const Graph& g,
                                   std::span<const NodeId> isolated,
                                   IsolatedPolicy policy) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");
  if (policy == IsolatedPolicy::error && !isolated.empty())
    throw std::invalid_argument(
        "graph has " + std::to_string(isolated.size()) +
        " isolated vertex(es); total domination is undefined for them "
        "(use the include-in-solution policy to solve anyway)");
}

}  // namespace detail

std::vector<double> assign_tags(const Graph& g, std::uint64_t seed) {
  std::vector<double> tags(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) tags[v] = node_tag(seed, v);
  return tags;
}

std::vector<NodeId> mark_neighbors(const Graph& g,
                                   std::span<const double> weights) {
  return detail::mark_from_weights(detail::AdjacencyProvider{&g}, weights);
}

std::vector<NodeId> initial_mark(const Graph& g,
                                 std::span<const double> tags) {
  std::vector<double> w(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    w[v] = static_cast<double>(g.degree(v)) + tags[v];
  return mark_neighbors(g, w);
}

std::vector<NodeId> refine_round(const Graph& g, std::span<const double> tags,
                                 std::span<const NodeId> prev_choices) {
  auto x = detail::mark_counts(g.node_count(), prev_choices);
  std::vector<double> w(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    w[v] = static_cast<double>(x[v]) + tags[v];
  return mark_neighbors(g, w);
}

Solution solve(const Graph& g, const RunConfig& cfg) {
  auto isolated = isolated_vertices(g);
  detail::require_no_isolated_or_policy(g, isolated, cfg.isolated);

  Solution sol;
  sol.m_used = cfg.m;
  sol.k_used = 1;
  sol.seed = cfg.seed;
  sol.mode = cfg.mode;
  sol.rounds = 2 + cfg.m;

  const auto start = std::chrono::steady_clock::now();
  auto tags = assign_tags(g, cfg.seed);
  detail::AdjacencyProvider p{&g};
  std::vector<NodeId> choices;
  if (cfg.mode == ExecMode::sequential) {
    choices = detail::run_rounds_sequential(p, tags, cfg.m);
    sol.messages = 0;
  } else {
    auto sim = detail::simulate_core(p, tags, cfg.m);
    choices = std::move(sim.choices);
    sol.messages = std::accumulate(sim.messages_per_round.begin(),
                                   sim.messages_per_round.end(),
                                   std::uint64_t{0});
  }
  sol.marked = detail::collect_marked(choices, isolated, cfg.isolated);
  sol.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return sol;
}

SimResult simulate_rounds(const Graph& g, const RunConfig& cfg) {
  if (cfg.mode != ExecMode::distributed_sim)
    throw std::invalid_argument(
        "simulate_rounds requires distributed-sim mode");
  auto isolated = isolated_vertices(g);
  detail::require_no_isolated_or_policy(g, isolated, cfg.isolated);

  SimResult res;
  Solution& sol = res.solution;
  sol.m_used = cfg.m;
  sol.k_used = 1;
  sol.seed = cfg.seed;
  sol.mode = ExecMode::distributed_sim;
  sol.rounds = 2 + cfg.m;

  const auto start = std::chrono::steady_clock::now();
  auto tags = assign_tags(g, cfg.seed);
  auto sim = detail::simulate_core(detail::AdjacencyProvider{&g}, tags, cfg.m);
  res.trace.per_round = std::move(sim.messages_per_round);
  sol.messages = res.trace.total();
  sol.marked = detail::collect_marked(sim.choices, isolated, cfg.isolated);
  sol.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

}  // namespace domset
