#pragma once

#include <span>
#include <vector>

#include "arborist/greedy.hpp"

namespace arborist {

// Bookkeeping for one materialized contraction step. pi maps each edge id
// of the contracted graph back to the original edge; enter_break holds, for
// enter edges only, the cycle node the original edge pointed at.
struct ContractionRecord {
  NodeId supernode = kNoNode;
  Cycle cycle;
  std::vector<NodeId> node_map;     // original node -> contracted node
  std::vector<EdgeId> pi;           // contracted edge id -> original edge id
  std::vector<NodeId> enter_break;  // contracted edge id -> entrance node, kNoNode otherwise
};

struct ContractedGraph {
  Graph graph;
  ContractionRecord record;
};

// Cycle edges minus the one entering j.
std::vector<EdgeId> break_cycle(const Cycle& c, NodeId j);

// Collapses the cycle into a fresh supernode. Edges into the cycle keep
// their parallel copies and get the weight of the matching broken cycle
// added; edges leaving keep their weight; edges inside are dropped.
ContractedGraph contract(const Graph& g, const Cycle& c);

// Expands a selection on the contracted graph back to original edge ids:
// pi over the selection, plus the cycle broken at the entered node.
std::vector<EdgeId> stitch(std::span<const EdgeId> a_c, const ContractionRecord& rec);

}  // namespace arborist
