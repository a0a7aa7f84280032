#pragma once

#include <cstdint>

#include "domset/engine.hpp"
#include "domset/graph.hpp"

namespace domset {

struct KConfig {
  unsigned k = 1;
  RunConfig base;
  /// Force building G^k up front. Off by default: the solver materializes
  /// automatically when the k-neighborhood lists fit the threshold below
  /// and answers on-the-fly BFS queries otherwise.
  bool materialize_power_graph = false;
  std::uint64_t power_link_threshold = std::uint64_t{1} << 25;
};

/// G^k: edge {u,v} iff 1 <= dist_G(u,v) <= k. power_graph(g, 1) == g.
/// Throws std::length_error when the result would exceed `max_links`
/// adjacency entries (G^k can be dense).
Graph power_graph(const Graph& g, unsigned k,
                  std::uint64_t max_links = std::uint64_t{1} << 31);

/// Runs the marking algorithm over k-hop neighborhoods. The marked set is
/// identical whether neighborhoods are materialized or queried on the fly.
/// Distributed-sim reports k*(2+m) rounds (each logical exchange needs k
/// hops); sequential reports the 2+m algorithm rounds.
Solution solve_kdistance(const Graph& g, const KConfig& cfg);

}  // namespace domset
