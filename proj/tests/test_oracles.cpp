#include <doctest.h>

#include <algorithm>
#include <charconv>
#include <cmath>

#include "domset/engine.hpp"
#include "domset/oracles.hpp"
#include "test_util.hpp"

using namespace domset;

TEST_CASE("domination checkers on P5") {
  Graph p5 = testutil::path_graph(5);
  CHECK(is_dominating(p5, std::vector<NodeId>{1, 3}));
  CHECK(!is_dominating(p5, std::vector<NodeId>{0}));
  std::vector<NodeId> all{0, 1, 2, 3, 4};
  CHECK(is_dominating(p5, all));

  CHECK(!is_total_dominating(p5, std::vector<NodeId>{1, 3}));  // 1 uncovered
  CHECK(is_total_dominating(p5, std::vector<NodeId>{1, 2, 3}));

  Graph k2 = testutil::complete_graph(2);
  CHECK(is_total_dominating(k2, std::vector<NodeId>{0, 1}));
}

TEST_CASE("k-distance checker") {
  Graph spider = testutil::spider_graph(3, 2);
  std::vector<NodeId> center{0};
  CHECK(is_k_dominating(spider, center, 2, false));
  CHECK(!is_k_dominating(spider, center, 2, true));  // center not self-covered

  // k = 1 agrees with the direct checks on random pairs
  Rng rng(808);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(30));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    std::vector<NodeId> s;
    for (NodeId v = 0; v < n; ++v)
      if (rng.next_double() < 0.4) s.push_back(v);
    CHECK(is_k_dominating(g, s, 1, false) == is_dominating(g, s));
    CHECK(is_k_dominating(g, s, 1, true) == is_total_dominating(g, s));
  }
}

TEST_CASE("checker matches a distance-oracle reimplementation") {
  Rng rng(303);
  for (int i = 0; i < 20; ++i) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.below(25));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    auto dist = testutil::all_pairs_dist(g);
    std::vector<NodeId> s;
    for (NodeId v = 0; v < n; ++v)
      if (rng.next_double() < 0.3) s.push_back(v);
    for (unsigned k : {1u, 2u, 3u}) {
      for (bool total : {false, true}) {
        bool expect = true;
        for (NodeId v = 0; v < n && expect; ++v) {
          if (!total && std::binary_search(s.begin(), s.end(), v)) continue;
          bool near = false;
          for (NodeId u : s)
            if (u != v && dist[v][u] <= k) near = true;
          expect = near;
        }
        CHECK(is_k_dominating(g, s, k, total) == expect);
      }
    }
  }
}

TEST_CASE("exact solver: frozen small instances") {
  auto p5 = testutil::path_graph(5);
  auto r5 = exact_mds(p5);
  CHECK(r5.gamma == 2);
  CHECK(r5.gamma_t == 3);
  CHECK(is_dominating(p5, r5.witness_mds));
  CHECK(is_total_dominating(p5, r5.witness_mtds));

  auto c6 = testutil::cycle_graph(6);
  auto r6 = exact_mds(c6);
  CHECK(r6.gamma == 2);
  CHECK(r6.gamma_t == 4);

  for (std::uint32_t n : {2u, 4u, 7u}) {
    auto rk = exact_mds(testutil::complete_graph(n));
    CHECK(rk.gamma == 1);
    CHECK(rk.gamma_t == 2);
  }

  // 4x4 grid: domination number 4
  auto grid = testutil::grid_graph(4, 4);
  CHECK(testutil::brute_force_min_dom(grid, false) == 4);
  CHECK(exact_mds(grid).gamma == 4);
}

TEST_CASE("exact solver agrees with subset enumeration on random graphs") {
  Rng rng(606);
  for (int i = 0; i < 25; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(11));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    CHECK(exact_min_dominating(g, false).size ==
          testutil::brute_force_min_dom(g, false));
    if (isolated_vertices(g).empty())
      CHECK(exact_min_dominating(g, true).size ==
            testutil::brute_force_min_dom(g, true));
  }
}

TEST_CASE("exact solver: gamma <= gamma_t <= 2*gamma, budget, isolated") {
  Rng rng(909);
  int done = 0;
  while (done < 15) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(14));
    Graph g = testutil::random_graph(rng, n, 3 * n);
    if (!isolated_vertices(g).empty()) continue;
    auto r = exact_mds(g);
    CHECK(r.gamma <= r.gamma_t);
    CHECK(r.gamma_t <= 2 * r.gamma);
    ++done;
  }
  CHECK_THROWS_AS(exact_mds(testutil::path_graph(30)), std::length_error);
  Graph iso = parse_graph("1 2\n3 3");
  CHECK(exact_min_dominating(iso, false).size == 2);  // isolated self-covers
  CHECK_THROWS_AS(exact_min_dominating(iso, true), std::invalid_argument);
}

TEST_CASE("greedy baseline") {
  Graph star = testutil::star_graph(4);
  CHECK(greedy_mds(star) == std::vector<NodeId>{0});

  Graph p5 = testutil::path_graph(5);
  CHECK(greedy_mds(p5).size() == 2);

  Rng rng(1111);
  for (int i = 0; i < 20; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(80));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    auto s = greedy_mds(g);
    CHECK(is_dominating(g, s));
    if (n <= 14) CHECK(s.size() >= exact_min_dominating(g, false).size);
  }
}

TEST_CASE("triangle-free planar generator") {
  Rng seeds(13);
  for (int i = 0; i < 30; ++i) {
    std::uint64_t seed = seeds.next_u64();
    std::uint32_t n = 2 + static_cast<std::uint32_t>(seeds.below(30));
    double density = 0.2 + 0.7 * seeds.next_double();
    Graph g = gen_planar_trianglefree(seed, n, density);
    CHECK(g.node_count() == n);
    CHECK(isolated_vertices(g).empty());
    // grid-coordinate labels let us confirm planarity by construction:
    // every edge joins orthogonally adjacent cells
    auto coord = [&](NodeId v) {
      const std::string& lab = g.label(v);
      auto us = lab.find('_');
      int r = 0, c = 0;
      std::from_chars(lab.data(), lab.data() + us, r);
      std::from_chars(lab.data() + us + 1, lab.data() + lab.size(), c);
      return std::pair{r, c};
    };
    for (NodeId v = 0; v < n; ++v) {
      auto [vr, vc] = coord(v);
      for (NodeId u : g.neighbors(v)) {
        auto [ur, uc] = coord(u);
        CHECK(std::abs(vr - ur) + std::abs(vc - uc) == 1);
      }
    }
    // triangle scan: v-u-w closed by a w-v edge
    for (NodeId v = 0; v < n; ++v)
      for (NodeId u : g.neighbors(v))
        for (NodeId w : g.neighbors(u))
          if (w != v) CHECK(!g.has_edge(w, v));
    // reproducible
    CHECK(gen_planar_trianglefree(seed, n, density) == g);
  }
  CHECK_THROWS_AS(gen_planar_trianglefree(1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("ratio trials stay under the m=0 bounds") {
  double max_mtds = 0.0;
  for (std::uint64_t t = 0; t < 60; ++t) {
    RatioTrial r = approx_ratio_trial(t, 0);
    CHECK(r.ratio_mtds <= 16.0);
    CHECK(r.ratio_mds <= 32.0);
    CHECK(r.gamma <= r.gamma_t);
    CHECK(r.gamma_t <= 2 * r.gamma);
    CHECK(r.alg_size >= r.gamma_t);  // heuristic can't beat the optimum
    max_mtds = std::max(max_mtds, r.ratio_mtds);
  }
  CHECK(max_mtds < 16.0);
  // m > 0 trials run without bound assertions
  RatioTrial r5 = approx_ratio_trial(7, 5);
  CHECK(r5.alg_size >= r5.gamma_t);
}

TEST_CASE("engine output is never below the exact optimum") {
  Rng rng(321);
  int done = 0;
  while (done < 12) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.below(10));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    if (!isolated_vertices(g).empty()) continue;
    Solution sol = solve(g, {.seed = rng.next_u64()});
    CHECK(sol.size() >= exact_min_dominating(g, true).size);
    CHECK(is_total_dominating(g, sol.marked));
    ++done;
  }
}
