#include <doctest.h>

#include <algorithm>

#include "domset/dynamic.hpp"
#include "domset/oracles.hpp"
#include "test_util.hpp"

using namespace domset;

namespace {

std::vector<NodeId> scratch_marked(const DynamicState& state) {
  Graph g = state.snapshot();
  RunConfig cfg{.seed = state.seed(),
                .m = 0,
                .isolated = IsolatedPolicy::include_in_solution};
  return solve(g, cfg).marked;
}

}  // namespace

TEST_CASE("tags persist and match a from-scratch assignment") {
  Graph g = testutil::path_graph(6);
  DynamicState state(g, 42);
  state.insert_edge(0, 5);
  auto scratch_tags = assign_tags(state.snapshot(), 42);
  for (NodeId v = 0; v < 6; ++v) CHECK(state.tags()[v] == scratch_tags[v]);
}

TEST_CASE("P4 + closing edge = C4, equals from-scratch") {
  Graph p4 = testutil::path_graph(4);
  DynamicState state(p4, 17);
  CHECK(state.marked() == scratch_marked(state));
  state.insert_edge(0, 3);
  CHECK(state.snapshot().edge_count() == 4);
  CHECK(state.marked() == scratch_marked(state));
}

TEST_CASE("insert then delete restores the original marked set") {
  Rng rng(5);
  Graph g = testutil::random_graph(rng, 30, 60);
  DynamicState state(g, 9);
  auto before = state.marked();
  Graph snap = state.snapshot();
  NodeId u = kInvalidNode, v = kInvalidNode;
  for (NodeId a = 0; a < 30 && u == kInvalidNode; ++a)
    for (NodeId b = a + 1; b < 30; ++b)
      if (!snap.has_edge(a, b)) {
        u = a;
        v = b;
        break;
      }
  REQUIRE(u != kInvalidNode);
  state.insert_edge(u, v);
  state.delete_edge(u, v);
  CHECK(state.marked() == before);
}

TEST_CASE("random flip sequence stays equal to from-scratch") {
  Rng rng(2718);
  Graph g = testutil::random_graph(rng, 60, 120);
  DynamicState state(g, 33);
  for (int step = 0; step < 50; ++step) {
    NodeId u = static_cast<NodeId>(rng.below(60));
    NodeId v = static_cast<NodeId>(rng.below(60));
    if (u == v) continue;
    bool present = std::binary_search(state.snapshot().neighbors(u).begin(),
                                      state.snapshot().neighbors(u).end(), v);
    state.apply(present ? EdgeOp::remove : EdgeOp::insert, u, v);
    CHECK(state.marked() == scratch_marked(state));
    CHECK(state.marked().size() == state.marked_size());
  }
}

TEST_CASE("locality: changed choices stay inside the affected set") {
  Rng rng(404);
  Graph g = testutil::random_graph(rng, 80, 200);
  DynamicState state(g, 12);
  for (int step = 0; step < 40; ++step) {
    NodeId u = static_cast<NodeId>(rng.below(80));
    NodeId v = static_cast<NodeId>(rng.below(80));
    if (u == v) continue;
    Graph snap = state.snapshot();
    bool present = snap.has_edge(u, v);
    auto before = state.choices();
    state.apply(present ? EdgeOp::remove : EdgeOp::insert, u, v);
    const auto& affected = state.last_affected();
    for (NodeId w = 0; w < 80; ++w) {
      if (state.choices()[w] != before[w])
        CHECK(std::binary_search(affected.begin(), affected.end(), w));
    }
    for (NodeId w : state.last_changed())
      CHECK(std::binary_search(affected.begin(), affected.end(), w));
  }
}

TEST_CASE("error paths") {
  Graph p3 = testutil::path_graph(3);
  DynamicState state(p3, 1);
  CHECK_THROWS_AS(state.insert_edge(0, 1), std::invalid_argument);  // dup
  CHECK_THROWS_AS(state.delete_edge(0, 2), std::invalid_argument);  // missing
  CHECK_THROWS_AS(state.insert_edge(1, 1), std::invalid_argument);  // loop
  CHECK_THROWS_AS(state.apply(EdgeOp::insert, 0, 99), std::out_of_range);

  DynamicState strict(p3, 1, IsolatedPolicy::error);
  CHECK_THROWS_AS(strict.delete_edge(0, 1), std::invalid_argument);
  // state untouched by the failed delete
  CHECK(strict.snapshot().has_edge(0, 1));

  // include policy tolerates isolation and reports the isolated node
  state.delete_edge(0, 1);
  CHECK(state.degree(0) == 0);
  CHECK(state.marked() == scratch_marked(state));
}

TEST_CASE("new nodes arrive with fresh tags from the same stream") {
  Graph g = parse_graph("a b\nb c\n");
  DynamicState state(g, 77);
  NodeId d = state.ensure_node("d");
  CHECK(d == 3);
  CHECK(state.ensure_node("d") == 3);  // idempotent
  state.insert_edge(d, state.find_label("a").value());
  CHECK(state.node_count() == 4);
  CHECK(state.marked() == scratch_marked(state));
  CHECK(state.tags()[3] == node_tag(77, 3));
}
