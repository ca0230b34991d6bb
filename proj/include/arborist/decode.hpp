#pragma once

#include <cstddef>
#include <vector>

#include "arborist/greedy.hpp"

namespace arborist {

// One scored root-edge removal considered while enforcing the single root
// attachment. removal_weight is the greedy weight after deleting every root
// edge into target and re-greedying that one node.
struct RemovalCandidate {
  EdgeId removed_edge = kNoEdge;
  NodeId target = kNoNode;
  double removal_weight = 0.0;
  bool feasible = false;
  double scratch_weight = 0.0;  // meaningful only when check_caches is set
};

struct ConstrainStep {
  double greedy_weight = 0.0;  // selection weight before this step
  std::vector<RemovalCandidate> candidates;
  std::size_t chosen = 0;  // index into candidates
  bool reduction = false;  // contracted instead of deleting
};

// Selection weight before and after expanding one contraction layer.
// The two agree up to rounding; tests assert exactly that.
struct StitchRecord {
  double weight_before = 0.0;
  double weight_after = 0.0;
};

struct DecodeTrace {
  std::size_t contractions = 0;
  std::size_t reduction_steps = 0;
  std::vector<ConstrainStep> constrain_steps;
  std::vector<StitchRecord> stitches;     // unwind order, innermost last
  std::vector<double> level_weights;      // most-contracted level first
  double final_weight = 0.0;

  void clear() { *this = DecodeTrace{}; }
};

struct DecodeOptions {
  // Re-derives every removal_weight by a full rescan and records it in
  // scratch_weight. Slow; for validation only.
  bool check_caches = false;
  DecodeTrace* trace = nullptr;
};

// Maximum-weight arborescence. Throws no_arborescence when some node is
// unreachable from the root.
EdgeSelection decode_mwa(const GraphView& v, const DecodeOptions& opt = {});
EdgeSelection decode_mwa(const Graph& g, const DecodeOptions& opt = {});

// Maximum-weight arborescence using exactly one root edge. Throws
// no_dependency_tree when the root constraint cannot be met.
EdgeSelection decode_dependency_tree(const GraphView& v, const DecodeOptions& opt = {});
EdgeSelection decode_dependency_tree(const Graph& g, const DecodeOptions& opt = {});

struct RootEdgeCandidate {
  Edge edge;
  NodeId target = kNoNode;
  double removal_weight = 0.0;
};

// Standalone scoring of the root-edge removals available to an acyclic
// greedy selection with two or more root edges. Ties prefer the lowest
// removed edge id. Throws no_feasible_removal when every target would be
// orphaned.
RootEdgeCandidate best_root_edge_removal(const GraphView& v, const GreedyResult& greedy);

}  // namespace arborist
