#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace domset {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = 0xffffffffu;

enum class GraphFormat { edge_list, dimacs_like, matrix_market };

struct LoadOptions {
  GraphFormat format = GraphFormat::edge_list;
  /// When false, seeing both orientations of an edge (or a repeated edge)
  /// is a parse error instead of a silent merge.
  bool treat_directed_as_undirected = true;
  std::string comment_prefixes = "#%";
};

/// Immutable simple undirected graph in compressed adjacency form.
/// Node ids are dense in [0, n); original file labels are retained.
/// Safe for concurrent reads once constructed.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list over dense ids < labels.size().
  /// Self-loops are dropped and duplicate/reversed edges merged; both
  /// are counted and queryable afterwards.
  static Graph from_edges(std::vector<std::pair<NodeId, NodeId>> edges,
                          std::vector<std::string> labels);

  /// Builds from explicit (possibly unsorted) adjacency lists. Lists must
  /// already be symmetric, loop-free and duplicate-free.
  static Graph from_adjacency(const std::vector<std::vector<NodeId>>& adj,
                              std::vector<std::string> labels);

  std::uint32_t node_count() const { return n_; }
  std::uint64_t edge_count() const { return m_edges_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }

  std::uint32_t degree(NodeId v) const {
    check_node(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const {
    check_node(v);
    return labels_[v];
  }
  std::optional<NodeId> find_label(std::string_view label) const;

  std::uint64_t self_loops_dropped() const { return self_loops_dropped_; }
  std::uint64_t duplicates_merged() const { return duplicates_merged_; }

  bool operator==(const Graph& other) const {
    return offsets_ == other.offsets_ && neighbors_ == other.neighbors_ &&
           labels_ == other.labels_;
  }

 private:
  void check_node(NodeId v) const;
  void build_label_index();

  std::uint32_t n_ = 0;
  std::uint64_t m_edges_ = 0;
  std::vector<std::uint64_t> offsets_;  // n+1 entries
  std::vector<NodeId> neighbors_;       // sorted per node
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::uint64_t self_loops_dropped_ = 0;
  std::uint64_t duplicates_merged_ = 0;
};

/// Loads and normalizes a graph file. Throws std::runtime_error with a
/// "<file>:<line>:" prefix on parse errors, and on an empty (n = 0) result.
Graph load_graph(const std::filesystem::path& path,
                 const LoadOptions& opts = {});

/// Same as load_graph but over an in-memory buffer; `origin` names the
/// source in error messages.
Graph parse_graph(std::string_view text, const LoadOptions& opts = {},
                  std::string_view origin = "<memory>");

/// All v with degree 0.
std::vector<NodeId> isolated_vertices(const Graph& g);

/// Reusable scratch for repeated depth-bounded BFS queries.
/// visit() calls f(u) for every u != v with dist(u, v) <= k, in
/// level-by-level discovery order.
class KhopScratch {
 public:
  explicit KhopScratch(const Graph& g)
      : g_(&g), stamp_(g.node_count(), 0) {}

  template <class F>
  void visit(NodeId v, unsigned k, F&& f) {
    ++round_;
    stamp_[v] = round_;
    frontier_.clear();
    frontier_.push_back(v);
    for (unsigned depth = 0; depth < k && !frontier_.empty(); ++depth) {
      next_.clear();
      for (NodeId x : frontier_) {
        for (NodeId u : g_->neighbors(x)) {
          if (stamp_[u] == round_) continue;
          stamp_[u] = round_;
          next_.push_back(u);
          f(u);
        }
      }
      frontier_.swap(next_);
    }
  }

 private:
  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<NodeId> frontier_, next_;
  std::uint32_t round_ = 0;
};

/// {u != v : dist(u,v) <= k}, sorted. k = 1 returns exactly adj(v).
std::vector<NodeId> khop_neighbors(const Graph& g, NodeId v, unsigned k);

}  // namespace domset
