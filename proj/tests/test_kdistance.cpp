#include <doctest.h>

#include <set>

#include "domset/kdistance.hpp"
#include "domset/oracles.hpp"
#include "test_util.hpp"

using namespace domset;

namespace {

std::set<std::pair<NodeId, NodeId>> edge_set(const Graph& g) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    for (NodeId u : g.neighbors(v))
      if (v < u) out.emplace(v, u);
  return out;
}

}  // namespace

TEST_CASE("power graph: P5 squared, identity at k=1, C6 cubed") {
  Graph p5 = testutil::path_graph(5);
  auto got = edge_set(power_graph(p5, 2));
  std::set<std::pair<NodeId, NodeId>> expect{{0, 1}, {0, 2}, {1, 2}, {1, 3},
                                             {2, 3}, {2, 4}, {3, 4}};
  CHECK(got == expect);

  CHECK(power_graph(p5, 1) == p5);

  Graph c6 = testutil::cycle_graph(6);
  Graph cubed = power_graph(c6, 3);
  CHECK(cubed.edge_count() == 15);  // K6
  CHECK(edge_set(cubed) == edge_set(testutil::complete_graph(6)));
}

TEST_CASE("power graph matches the distance oracle on random graphs") {
  Rng rng(31);
  for (int i = 0; i < 8; ++i) {
    std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(40));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    auto dist = testutil::all_pairs_dist(g);
    for (unsigned k : {2u, 3u}) {
      auto got = edge_set(power_graph(g, k));
      std::set<std::pair<NodeId, NodeId>> expect;
      for (NodeId v = 0; v < n; ++v)
        for (NodeId u = v + 1; u < n; ++u)
          if (dist[v][u] >= 1 && dist[v][u] <= k) expect.emplace(v, u);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("power graph memory budget") {
  Graph c = testutil::cycle_graph(100);
  CHECK_THROWS_AS(power_graph(c, 3, /*max_links=*/10), std::length_error);
}

TEST_CASE("k=1 reduces exactly to the base solve") {
  Rng rng(77);
  for (int i = 0; i < 10; ++i) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.below(60));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    KConfig cfg;
    cfg.k = 1;
    cfg.base.seed = rng.next_u64();
    cfg.base.m = 2;
    cfg.base.isolated = IsolatedPolicy::include_in_solution;
    Solution a = solve_kdistance(g, cfg);
    Solution b = solve(g, cfg.base);
    CHECK(a.marked == b.marked);
    CHECK(a.k_used == 1);
  }
}

TEST_CASE("spider, k=2, m=0: size 2 against the exact k-distance optimum") {
  Graph spider = testutil::spider_graph(3, 2);
  Graph squared = power_graph(spider, 2);
  // exact optima live on the power graph
  CHECK(testutil::brute_force_min_dom(squared, false) == 1);
  CHECK(testutil::brute_force_min_dom(squared, true) == 2);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    KConfig cfg;
    cfg.k = 2;
    cfg.base.seed = seed;
    Solution sol = solve_kdistance(spider, cfg);
    CHECK(sol.size() == 2);
    CHECK(sol.contains(0));  // the center is everyone's 2-hop heavyweight
    CHECK(is_k_dominating(spider, sol.marked, 2, true));
  }
}

TEST_CASE("materialized and on-the-fly neighborhoods agree") {
  Rng rng(123);
  for (int i = 0; i < 6; ++i) {
    std::uint32_t n = 20 + static_cast<std::uint32_t>(rng.below(300));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    for (unsigned k : {2u, 3u}) {
      KConfig mat;
      mat.k = k;
      mat.base.seed = 5 + i;
      mat.base.m = 1;
      mat.base.isolated = IsolatedPolicy::include_in_solution;
      mat.materialize_power_graph = true;
      KConfig fly = mat;
      fly.materialize_power_graph = false;
      fly.power_link_threshold = 0;  // force BFS queries
      Solution a = solve_kdistance(g, mat);
      Solution b = solve_kdistance(g, fly);
      CHECK(a.marked == b.marked);
      CHECK(is_k_dominating(g, a.marked, k, false));
      CHECK(covers(g, a.marked,
                   {.total = true, .k = k, .ignore_isolated = true}));
    }
  }
}

TEST_CASE("distributed-sim k-distance: same set, k*(2+m) rounds") {
  Graph g = testutil::spider_graph(4, 3);
  for (unsigned m : {0u, 2u}) {
    KConfig cfg;
    cfg.k = 2;
    cfg.base.seed = 8;
    cfg.base.m = m;
    cfg.base.mode = ExecMode::distributed_sim;
    Solution sim = solve_kdistance(g, cfg);
    cfg.base.mode = ExecMode::sequential;
    Solution seq = solve_kdistance(g, cfg);
    CHECK(sim.marked == seq.marked);
    CHECK(sim.rounds == 2 * (2 + m));
    CHECK(seq.rounds == 2 + m);
    CHECK(sim.messages > 0);
    CHECK(seq.messages == 0);
  }
}
