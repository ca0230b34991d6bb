#include "arborist/greedy.hpp"

#include "arborist/decode.hpp"
#include "testutil.hpp"

using namespace arborist;

TEST_CASE("greedy_graph picks per-node maxima and reports the cycle") {
  Graph g = sample_graph();
  GreedyResult r = greedy_graph(g);
  CHECK(r.selection.chosen[1] == 0);
  CHECK(r.selection.chosen[2] == 5);
  CHECK(r.selection.chosen[3] == 6);
  CHECK(r.selection.chosen[4] == 3);
  CHECK(r.selection.total_weight == 270.0);
  REQUIRE(r.cycle.has_value());
  CHECK(r.cycle->nodes == std::vector<NodeId>{2, 4, 3});
  CHECK(r.cycle->internal_edges == std::vector<EdgeId>{5, 3, 6});
  CHECK(r.cycle->weight == 180.0);
  CHECK(r.cycle->contains(4));
  CHECK_FALSE(r.cycle->contains(1));
  CHECK(r.cycle->internal_edge_into(3) == 6);
  CHECK_ERRC(r.cycle->internal_edge_into(1), Errc::node_not_in_cycle);
}

TEST_CASE("greedy_graph without a cycle") {
  Graph g = build_graph(2, {{0, 1, 5.0}, {0, 2, 7.0}, {1, 2, 6.0}});
  GreedyResult r = greedy_graph(g);
  CHECK(r.selection.chosen[1] == 0);
  CHECK(r.selection.chosen[2] == 1);
  CHECK(r.selection.total_weight == 12.0);
  CHECK_FALSE(r.cycle.has_value());
}

TEST_CASE("greedy_graph requires an incoming edge everywhere") {
  Graph g = build_graph(2, {{0, 1, 5.0}});
  CHECK_ERRC(greedy_graph(g), Errc::no_incoming_edge);
}

TEST_CASE("find_cycle prefers the cycle with the smallest member") {
  // two disjoint two-cycles plus weak root edges nobody greedy-picks
  Graph g = build_graph(4, {
      {0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0},
      {2, 1, 9.0}, {1, 2, 9.0}, {4, 3, 9.0}, {3, 4, 9.0},
  });
  GreedyResult r = greedy_graph(g);
  REQUIRE(r.cycle.has_value());
  CHECK(r.cycle->nodes == std::vector<NodeId>{1, 2});
  CHECK(r.cycle->internal_edge_into(1) == 4);
  CHECK(r.cycle->internal_edge_into(2) == 5);
}

TEST_CASE("find_cycle handles partial selections and selections without cycles") {
  Graph g = sample_graph();
  EdgeSelection sel;
  sel.chosen = {kNoEdge, 0, 1, 2, 3};
  CHECK_FALSE(find_cycle(g, sel).has_value());
  sel.chosen = {kNoEdge, 0, kNoEdge, kNoEdge, kNoEdge};
  CHECK_FALSE(find_cycle(g, sel).has_value());
}

TEST_CASE("greedy is idempotent under restriction to its own picks") {
  std::mt19937_64 rng(11);
  int tried = 0;
  for (int round = 0; round < 200 && tried < 60; ++round) {
    Graph g = testutil::fuzz_graph(rng);
    GreedyResult r;
    try {
      r = greedy_graph(g);
    } catch (const Error&) {
      continue;  // some node had no incoming edge
    }
    ++tried;
    std::vector<EdgeInput> kept;
    for (NodeId v = 1; v < g.node_count(); ++v) {
      const Edge& e = g.edge(r.selection.chosen[v]);
      kept.push_back({e.src, e.dst, e.weight});
    }
    Graph sub = build_graph(g.token_count(), kept);
    GreedyResult again = greedy_graph(sub);
    CHECK(again.selection.total_weight == r.selection.total_weight);
    for (NodeId v = 1; v < g.node_count(); ++v) {
      const Edge& was = g.edge(r.selection.chosen[v]);
      const Edge& now = sub.edge(again.selection.chosen[v]);
      CHECK(was.src == now.src);
      CHECK(was.dst == now.dst);
      CHECK(was.weight == now.weight);
    }
  }
  CHECK(tried > 0);
}

TEST_CASE("acyclic greedy selections are arborescences and bound the optimum") {
  std::mt19937_64 rng(13);
  int decoded = 0;
  for (int round = 0; round < 300 && decoded < 80; ++round) {
    Graph g = testutil::fuzz_graph(rng);
    GreedyResult r;
    try {
      r = greedy_graph(g);
    } catch (const Error&) {
      continue;
    }
    if (!r.cycle) CHECK(is_arborescence(g, r.selection.edge_ids()));
    EdgeSelection mwa;
    try {
      mwa = decode_mwa(g);
    } catch (const Error&) {
      continue;
    }
    ++decoded;
    CHECK(r.selection.total_weight >= mwa.total_weight);
    try {
      EdgeSelection tree = decode_dependency_tree(g);
      CHECK(mwa.total_weight >= tree.total_weight);
    } catch (const Error&) {
    }
  }
  CHECK(decoded > 0);
}
