#include <doctest.h>

#include <algorithm>
#include <set>

#include "domset/graph.hpp"
#include "test_util.hpp"

using namespace domset;

TEST_CASE("edge list: duplicates merged, symmetry") {
  Graph g = parse_graph("1 2\n2 3\n3 1\n1 2");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.duplicates_merged() == 1);
  for (NodeId v = 0; v < 3; ++v)
    for (NodeId u : g.neighbors(v)) CHECK(g.has_edge(u, v));
}

TEST_CASE("edge list: self-loop dropped, node retained") {
  Graph g = parse_graph("5 5\n5 6");
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.self_loops_dropped() == 1);
  CHECK(g.label(0) == "5");
  CHECK(g.label(1) == "6");
}

TEST_CASE("edge list: pure self-loop node is isolated") {
  Graph g = parse_graph("5 5");
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(isolated_vertices(g) == std::vector<NodeId>{0});
}

TEST_CASE("edge list: string labels densify in first-seen order") {
  Graph g = parse_graph("alice bob\nbob carol\n# comment\n% also comment\n");
  CHECK(g.node_count() == 3);
  CHECK(g.label(0) == "alice");
  CHECK(g.find_label("carol") == NodeId{2});
  CHECK(!g.find_label("dave").has_value());
}

TEST_CASE("edge list: parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("1 2\nonly_one_token\n", {}, "f.txt"),
                       doctest::Contains("f.txt:2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_graph("", {}, "f.txt"),
                       doctest::Contains("empty graph"), std::runtime_error);
}

TEST_CASE("strict undirected mode rejects duplicate arcs") {
  LoadOptions opts;
  opts.treat_directed_as_undirected = false;
  CHECK_THROWS_AS(parse_graph("1 2\n2 1\n", opts), std::runtime_error);
  CHECK_NOTHROW(parse_graph("1 2\n2 3\n", opts));
}

TEST_CASE("dimacs: p declares nodes, e lines 1-based") {
  LoadOptions opts;
  opts.format = GraphFormat::dimacs_like;
  Graph g = parse_graph("c header\np edge 3 1\ne 1 2\n", opts);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(isolated_vertices(g) == std::vector<NodeId>{2});

  CHECK_THROWS_AS(parse_graph("e 1 2\np edge 3 1\n", opts),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n", opts),
                  std::runtime_error);
}

TEST_CASE("matrix market: banner skipped, 1-based, square required") {
  LoadOptions opts;
  opts.format = GraphFormat::matrix_market;
  Graph g = parse_graph(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "% comment\n"
      "4 4 3\n"
      "1 2\n2 3\n3 4 0.5\n",
      opts);
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(parse_graph("3 4 1\n1 2\n", opts), std::runtime_error);
}

TEST_CASE("degree") {
  Graph k4 = testutil::complete_graph(4);
  for (NodeId v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  Graph p5 = testutil::path_graph(5);
  CHECK(p5.degree(0) == 1);
  CHECK(p5.degree(4) == 1);
  CHECK(p5.degree(2) == 2);
  CHECK_THROWS_AS(p5.degree(5), std::out_of_range);
}

TEST_CASE("khop basics") {
  Graph p5 = testutil::path_graph(5);
  CHECK(khop_neighbors(p5, 0, 2) == std::vector<NodeId>{1, 2});

  Graph spider = testutil::spider_graph(3, 2);
  auto two_hop = khop_neighbors(spider, 0, 2);
  CHECK(two_hop.size() == 6);  // the whole rest of the graph

  CHECK_THROWS_AS(khop_neighbors(p5, 9, 1), std::out_of_range);
  CHECK_THROWS_AS(khop_neighbors(p5, 0, 0), std::invalid_argument);
}

TEST_CASE("khop: k=1 equals adjacency, nested in k+1, distance oracle") {
  Rng rng(42);
  for (int i = 0; i < 12; ++i) {
    std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(60));
    Graph g = testutil::random_graph(rng, n, 2 * n);
    auto dist = testutil::all_pairs_dist(g);
    for (NodeId v = 0; v < n; ++v) {
      auto adj = g.neighbors(v);
      CHECK(khop_neighbors(g, v, 1) ==
            std::vector<NodeId>(adj.begin(), adj.end()));
      for (unsigned k = 1; k <= 3; ++k) {
        auto got = khop_neighbors(g, v, k);
        std::vector<NodeId> expect;
        for (NodeId u = 0; u < n; ++u)
          if (u != v && dist[v][u] <= k) expect.push_back(u);
        CHECK(got == expect);
        auto wider = khop_neighbors(g, v, k + 1);
        CHECK(std::includes(wider.begin(), wider.end(), got.begin(),
                            got.end()));
      }
    }
  }
}

TEST_CASE("load idempotence and degree sum") {
  Rng rng(7);
  for (int i = 0; i < 8; ++i) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(40));
    Graph g = testutil::random_graph(rng, n, 3 * n);
    std::uint64_t sum = 0;
    for (NodeId v = 0; v < n; ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
  std::string text = "1 2\n2 3\n4 2\n3 1\n";
  CHECK(parse_graph(text) == parse_graph(text));
}
