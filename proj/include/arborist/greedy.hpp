#pragma once

#include <optional>
#include <vector>

#include "arborist/graph.hpp"

namespace arborist {

// A cycle inside a selection. nodes is rotated so nodes[0] is the smallest
// member and follows edge direction: internal_edges[k] enters nodes[k], and
// its source is the preceding member. The root is never a member.
struct Cycle {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> internal_edges;
  double weight = 0.0;

  bool contains(NodeId v) const noexcept;
  EdgeId internal_edge_into(NodeId v) const;  // node_not_in_cycle
};

struct GreedyResult {
  EdgeSelection selection;
  std::optional<Cycle> cycle;
};

// Picks the heaviest visible incoming edge for every non-root node and
// reports one cycle of the result if any exists.
GreedyResult greedy_graph(const GraphView& v);
GreedyResult greedy_graph(const Graph& g);

// Deterministic cycle choice over a total selection: among the (disjoint)
// cycles, the one whose smallest member id is smallest.
std::optional<Cycle> find_cycle(const Graph& g, const EdgeSelection& sel);

}  // namespace arborist
