#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

struct CoverageCheck {
  bool total = false;
  unsigned k = 1;
  /// Skip degree-0 vertices (the part of the graph the algorithm is
  /// defined over).
  bool ignore_isolated = false;
};

/// Generic domination check; the named wrappers below are the usual entry
/// points.
bool covers(const Graph& g, std::span<const NodeId> s, CoverageCheck opt);

/// Every v outside s has a neighbor in s.
bool is_dominating(const Graph& g, std::span<const NodeId> s);

/// Every v (members included) has a neighbor in s.
bool is_total_dominating(const Graph& g, std::span<const NodeId> s);

/// Distance-k generalization; k = 1 coincides with the checks above.
bool is_k_dominating(const Graph& g, std::span<const NodeId> s, unsigned k,
                     bool total);

struct ExactOptions {
  std::uint32_t node_budget = 24;
};

struct ExactWitness {
  std::uint32_t size = 0;
  std::vector<NodeId> witness;
};

struct ExactResult {
  std::uint32_t gamma = 0;
  std::uint32_t gamma_t = 0;
  std::vector<NodeId> witness_mds;
  std::vector<NodeId> witness_mtds;
};

/// Exact minimum (total) dominating set by size-increasing search with
/// coverage pruning. Throws when g.node_count() exceeds the budget, and
/// for the total problem when the graph has isolated vertices.
ExactWitness exact_min_dominating(const Graph& g, bool total,
                                  ExactOptions opts = {});

/// Both exact optima at once; gamma <= gamma_t <= 2*gamma holds whenever
/// the graph has no isolated vertices.
ExactResult exact_mds(const Graph& g, ExactOptions opts = {});

/// Greedy baseline: repeatedly take the node whose closed neighborhood
/// covers the most uncovered nodes (ties: smaller id). Always dominating.
std::vector<NodeId> greedy_mds(const Graph& g);

/// Connected triangle-free planar instance: a random subgraph of an
/// r x c grid, re-sampled until connected (bounded attempts, then a
/// serpentine backbone is added). Self-checks the triangle-free property.
/// Node labels carry the grid coordinates as "r_c".
Graph gen_planar_trianglefree(std::uint64_t seed, std::uint32_t n,
                              double density);

struct RatioTrial {
  std::uint32_t n = 0;
  double density = 0.0;
  std::uint32_t alg_size = 0;
  std::uint32_t gamma = 0;
  std::uint32_t gamma_t = 0;
  double ratio_mds = 0.0;
  double ratio_mtds = 0.0;
};

/// One generated-instance trial: solve with the given m, compare against
/// the exact optima. For m = 0 the 16 (MTDS) / 32 (MDS) bounds are
/// verified and a violation throws (it would mean a solver bug).
RatioTrial approx_ratio_trial(std::uint64_t seed, unsigned m);

}  // namespace domset
