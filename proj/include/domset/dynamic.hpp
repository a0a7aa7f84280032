#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "domset/engine.hpp"
#include "domset/graph.hpp"

namespace domset {

enum class EdgeOp { insert, remove };

/// Maintains an m = 0 solution under edge insertions and deletions by
/// re-evaluating only the affected neighborhood {u, v} + adj(u) + adj(v).
/// Tags are stable across updates (new nodes draw from the same keyed
/// stream), so the maintained marked set always equals a from-scratch
/// solve over the current graph with the same seed.
class DynamicState {
 public:
  DynamicState(const Graph& g, std::uint64_t seed,
               IsolatedPolicy policy = IsolatedPolicy::include_in_solution);

  /// Inserts/removes {u, v}. Throws on duplicate insert, missing delete,
  /// self-loops, and on deletions that would isolate a node under
  /// policy = error (the state is left untouched on error).
  void apply(EdgeOp op, NodeId u, NodeId v);
  void insert_edge(NodeId u, NodeId v) { apply(EdgeOp::insert, u, v); }
  void delete_edge(NodeId u, NodeId v) { apply(EdgeOp::remove, u, v); }

  /// Id for a label, creating the node (with a fresh tag) if unseen.
  NodeId ensure_node(const std::string& label);
  std::optional<NodeId> find_label(std::string_view label) const;

  std::uint32_t node_count() const {
    return static_cast<std::uint32_t>(adj_.size());
  }
  std::uint32_t degree(NodeId v) const;
  std::uint64_t seed() const { return seed_; }
  std::span<const double> tags() const { return tags_; }
  const std::vector<NodeId>& choices() const { return choice_; }

  /// Current marked set (image of the choice map, plus isolated vertices
  /// under the include policy), sorted.
  std::vector<NodeId> marked() const;
  std::size_t marked_size() const;

  /// Immutable copy of the current graph, ids and labels preserved.
  Graph snapshot() const;

  /// Diagnostics for the most recent apply(): the affected set that was
  /// re-evaluated, and the nodes whose choice actually changed.
  const std::vector<NodeId>& last_affected() const { return last_affected_; }
  const std::vector<NodeId>& last_changed() const { return last_changed_; }

 private:
  void reevaluate(NodeId v);

  std::uint64_t seed_;
  IsolatedPolicy policy_;
  std::vector<std::vector<NodeId>> adj_;  // sorted
  std::vector<double> tags_;
  std::vector<NodeId> choice_;
  std::vector<std::uint32_t> chosen_count_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::vector<NodeId> last_affected_, last_changed_;
};

}  // namespace domset
