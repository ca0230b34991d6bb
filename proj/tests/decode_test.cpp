#include "arborist/decode.hpp"

#include <cmath>

#include "arborist/contraction.hpp"
#include "arborist/oracle.hpp"
#include "testutil.hpp"

using namespace arborist;

TEST_CASE("decode_mwa on the worked example") {
  Graph g = sample_graph();
  DecodeTrace tr;
  DecodeOptions opt;
  opt.trace = &tr;
  EdgeSelection sel = decode_mwa(g, opt);
  CHECK(sel.total_weight == 260.0);
  CHECK(testutil::sorted_ids(sel) == std::vector<EdgeId>{0, 1, 3, 6});
  CHECK(tr.contractions == 1);
  CHECK(tr.reduction_steps == 0);
  REQUIRE(tr.level_weights.size() == 2);
  CHECK(tr.level_weights[0] == 260.0);
  CHECK(tr.level_weights[1] == 260.0);
  REQUIRE(tr.stitches.size() == 1);
  CHECK(tr.stitches[0].weight_before == tr.stitches[0].weight_after);
  CHECK(tr.final_weight == 260.0);
}

TEST_CASE("decode_dependency_tree on the worked example") {
  Graph g = sample_graph();
  DecodeTrace tr;
  DecodeOptions opt;
  opt.trace = &tr;
  opt.check_caches = true;
  EdgeSelection sel = decode_dependency_tree(g, opt);
  CHECK(sel.total_weight == 210.0);
  CHECK(testutil::sorted_ids(sel) == std::vector<EdgeId>{0, 2, 3, 5});
  auto heads = selection_heads(g, sel);
  CHECK(heads[1] == 0);
  CHECK(heads[2] == 3);
  CHECK(heads[3] == 1);
  CHECK(heads[4] == 2);

  // one constrain step scoring both root-edge removals
  REQUIRE(tr.constrain_steps.size() == 1);
  const ConstrainStep& step = tr.constrain_steps[0];
  CHECK(step.greedy_weight == 260.0);
  REQUIRE(step.candidates.size() == 2);
  CHECK(step.candidates[0].removed_edge == 0);
  CHECK(step.candidates[0].removal_weight == 190.0);
  CHECK(step.candidates[1].removed_edge == 1);
  CHECK(step.candidates[1].removal_weight == 210.0);
  CHECK(step.chosen == 1);
  CHECK_FALSE(step.reduction);
  CHECK(step.candidates[0].scratch_weight == 190.0);
  CHECK(step.candidates[1].scratch_weight == 210.0);
  CHECK(tr.reduction_steps == 0);
  for (double w : tr.level_weights) CHECK(w == 210.0);
}

TEST_CASE("single-token sentences decode in both modes") {
  Graph g = build_graph(1, {{0, 1, 5.0}});
  CHECK(decode_mwa(g).total_weight == 5.0);
  CHECK(decode_dependency_tree(g).total_weight == 5.0);
}

TEST_CASE("tied removal scores pick the lowest removed edge id") {
  Graph g = build_graph(2, {{0, 1, 10.0}, {0, 2, 10.0}, {1, 2, 9.0}, {2, 1, 9.0}});
  CHECK(decode_mwa(g).total_weight == 20.0);
  DecodeTrace tr;
  DecodeOptions opt;
  opt.trace = &tr;
  EdgeSelection sel = decode_dependency_tree(g, opt);
  CHECK(sel.total_weight == 19.0);
  CHECK(testutil::sorted_ids(sel) == std::vector<EdgeId>{1, 3});
  REQUIRE(tr.constrain_steps.size() == 1);
  CHECK(tr.constrain_steps[0].candidates[0].removal_weight == 19.0);
  CHECK(tr.constrain_steps[0].candidates[1].removal_weight == 19.0);
  CHECK(tr.constrain_steps[0].candidates[tr.constrain_steps[0].chosen].removed_edge == 0);
}

TEST_CASE("reduction case: the best removal closes a cycle that gets contracted") {
  // removing root->1 re-attaches 1 under 2 while 2 hangs off 1, so the
  // swap closes {1,2} and the root edges survive as enter edges
  Graph g = build_graph(3, {
      {0, 1, 10.0},  // e0
      {0, 3, 10.0},  // e1
      {1, 2, 10.0},  // e2
      {2, 1, 9.0},   // e3
      {1, 3, 1.0},   // e4
  });
  DecodeTrace tr;
  DecodeOptions opt;
  opt.trace = &tr;
  opt.check_caches = true;
  EdgeSelection sel = decode_dependency_tree(g, opt);
  CHECK(sel.total_weight == 21.0);
  CHECK(testutil::sorted_ids(sel) == std::vector<EdgeId>{0, 2, 4});
  CHECK(tr.reduction_steps == 1);
  CHECK(tr.contractions == 1);
  REQUIRE(tr.constrain_steps.size() == 2);
  CHECK(tr.constrain_steps[0].reduction);
  CHECK(tr.constrain_steps[0].candidates[tr.constrain_steps[0].chosen].removed_edge == 0);
  CHECK_FALSE(tr.constrain_steps[1].reduction);
  for (double w : tr.level_weights) CHECK(w == 21.0);

  auto oracle = best_tree(GraphView(g), /*constrained=*/true);
  REQUIRE(oracle.has_value());
  CHECK(oracle->weight == 21.0);
}

TEST_CASE("reduction case with no way out reports no dependency tree") {
  // node 3 must take the lone root edge, which forces the {1,2} cycle
  Graph g = build_graph(3, {
      {0, 1, 10.0},
      {0, 3, 10.0},
      {1, 2, 10.0},
      {2, 1, 9.0},
  });
  CHECK(decode_mwa(g).total_weight == 30.0);
  CHECK_ERRC(decode_dependency_tree(g), Errc::no_dependency_tree);
  CHECK_FALSE(best_tree(GraphView(g), /*constrained=*/true).has_value());
}

TEST_CASE("unreachable nodes raise the mode-specific error") {
  Graph g = build_graph(2, {{0, 1, 5.0}});
  CHECK_ERRC(decode_mwa(g), Errc::no_arborescence);
  CHECK_ERRC(decode_dependency_tree(g), Errc::no_dependency_tree);
}

TEST_CASE("star graphs have arborescences but no dependency tree") {
  Graph g = build_graph(2, {{0, 1, 5.0}, {0, 2, 7.0}});
  CHECK(decode_mwa(g).total_weight == 12.0);
  CHECK_ERRC(decode_dependency_tree(g), Errc::no_dependency_tree);
}

TEST_CASE("removals delete every parallel root edge at once") {
  Graph g = build_graph(2, {
      {0, 1, 10.0},  // e0
      {0, 1, 9.0},   // e1, parallel copy
      {0, 2, 8.0},   // e2
      {1, 2, 1.0},   // e3
      {2, 1, 7.0},   // e4
  });
  EdgeSelection sel = decode_dependency_tree(g);
  CHECK(sel.total_weight == 15.0);
  CHECK(testutil::sorted_ids(sel) == std::vector<EdgeId>{2, 4});
  auto oracle = best_tree(GraphView(g), /*constrained=*/true);
  REQUIRE(oracle.has_value());
  CHECK(oracle->weight == 15.0);
}

TEST_CASE("best_root_edge_removal scores candidates standalone") {
  Graph g = sample_graph();
  GreedyResult r = greedy_graph(g);
  ContractedGraph cg = contract(g, *r.cycle);
  GraphView v(cg.graph);
  GreedyResult cr = greedy_graph(v);
  REQUIRE_FALSE(cr.cycle.has_value());
  RootEdgeCandidate cand = best_root_edge_removal(v, cr);
  CHECK(cand.edge.id == 1);
  CHECK(cand.target == 2);
  CHECK(cand.removal_weight == 210.0);

  Graph tie = build_graph(2, {{0, 1, 10.0}, {0, 2, 10.0}, {1, 2, 9.0}, {2, 1, 9.0}});
  RootEdgeCandidate t = best_root_edge_removal(GraphView(tie), greedy_graph(tie));
  CHECK(t.edge.id == 0);
  CHECK(t.target == 1);
  CHECK(t.removal_weight == 19.0);

  Graph star = build_graph(2, {{0, 1, 5.0}, {0, 2, 7.0}});
  CHECK_ERRC(best_root_edge_removal(GraphView(star), greedy_graph(star)),
             Errc::no_feasible_removal);

  Graph one = build_graph(1, {{0, 1, 5.0}});
  CHECK_ERRC(best_root_edge_removal(GraphView(one), greedy_graph(one)), Errc::precondition);
}

TEST_CASE("randomized decodes agree with exhaustive search") {
  std::mt19937_64 rng(29);
  int solved = 0;
  for (int round = 0; round < 600; ++round) {
    Graph g = testutil::fuzz_graph(rng);
    GraphView v(g);
    auto oracle_u = best_tree(v, false);
    auto oracle_c = best_tree(v, true);

    DecodeTrace tr;
    DecodeOptions opt;
    opt.trace = &tr;
    opt.check_caches = true;

    EdgeSelection got_u;
    bool ok_u = true;
    try {
      got_u = decode_mwa(v, opt);
    } catch (const Error& e) {
      ok_u = false;
      CHECK(e.code() == Errc::no_arborescence);
    }
    CHECK(ok_u == oracle_u.has_value());
    if (ok_u && oracle_u) {
      ++solved;
      CHECK(got_u.total_weight == oracle_u->weight);
      CHECK(is_arborescence(g, got_u.edge_ids()));
      CHECK(total_weight(g, got_u.edge_ids()) == got_u.total_weight);
      for (double w : tr.level_weights) CHECK(w == got_u.total_weight);
      for (const StitchRecord& s : tr.stitches) CHECK(s.weight_before == s.weight_after);
      CHECK(tr.contractions <= g.token_count());
    }

    bool ok_c = true;
    EdgeSelection got_c;
    try {
      got_c = decode_dependency_tree(v, opt);
    } catch (const Error& e) {
      ok_c = false;
      CHECK(e.code() == Errc::no_dependency_tree);
    }
    CHECK(ok_c == oracle_c.has_value());
    if (ok_c && oracle_c) {
      CHECK(got_c.total_weight == oracle_c->weight);
      CHECK(is_dependency_tree(g, got_c.edge_ids()));
      CHECK(tr.reduction_steps <= g.token_count());
      for (double w : tr.level_weights) CHECK(w == got_c.total_weight);
      for (const ConstrainStep& st : tr.constrain_steps)
        for (const RemovalCandidate& cand : st.candidates)
          if (cand.feasible) CHECK(cand.removal_weight == cand.scratch_weight);
    }
  }
  CHECK(solved > 100);
}
