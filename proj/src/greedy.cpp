#include "arborist/greedy.hpp"

#include <algorithm>

namespace arborist {

bool Cycle::contains(NodeId v) const noexcept {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

EdgeId Cycle::internal_edge_into(NodeId v) const {
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k] == v) return internal_edges[k];
  raise(Errc::node_not_in_cycle, "node " + std::to_string(v));
}

GreedyResult greedy_graph(const GraphView& v) {
  const Graph& g = v.graph();
  GreedyResult out;
  out.selection.chosen.assign(g.node_count(), kNoEdge);
  for (NodeId j = 1; j < g.node_count(); ++j) {
    std::optional<Edge> e = best_incoming(v, j);
    if (!e) raise(Errc::no_incoming_edge, "node " + std::to_string(j));
    out.selection.chosen[j] = e->id;
    out.selection.total_weight += e->weight;
  }
  out.cycle = find_cycle(g, out.selection);
  return out;
}

GreedyResult greedy_graph(const Graph& g) { return greedy_graph(GraphView(g)); }

std::optional<Cycle> find_cycle(const Graph& g, const EdgeSelection& sel) {
  // Each node has one chosen parent, so walking head-of-head chains either
  // reaches the root or closes a loop. Distinct loops are node disjoint;
  // scanning starts in ascending order and keeps the loop with the smallest
  // member.
  std::vector<NodeId> mark(g.node_count(), kNoNode);
  std::optional<Cycle> best;
  NodeId best_min = kNoNode;
  for (NodeId start = 1; start < g.node_count(); ++start) {
    if (mark[start] != kNoNode) continue;
    if (start >= sel.chosen.size() || sel.chosen[start] == kNoEdge) continue;
    NodeId v = start;
    while (v != kRoot && mark[v] == kNoNode) {
      mark[v] = start;
      EdgeId id = (v < sel.chosen.size()) ? sel.chosen[v] : kNoEdge;
      if (id == kNoEdge) break;  // partial selection, chain just stops
      v = g.edge(id).src;
    }
    if (v == kRoot || mark[v] != start) continue;

    // Walked into this pass's own path: v starts the loop. Collect it in
    // walk order (each node to its head), then flip to edge direction.
    std::vector<NodeId> loop;
    NodeId u = v;
    do {
      loop.push_back(u);
      u = g.edge(sel.chosen[u]).src;
    } while (u != v);
    NodeId mn = *std::min_element(loop.begin(), loop.end());
    if (best && best_min <= mn) continue;
    std::reverse(loop.begin(), loop.end());
    std::rotate(loop.begin(), std::find(loop.begin(), loop.end(), mn), loop.end());
    Cycle c;
    c.nodes = std::move(loop);
    for (NodeId w : c.nodes) {
      c.internal_edges.push_back(sel.chosen[w]);
      c.weight += g.edge(sel.chosen[w]).weight;
    }
    best_min = mn;
    best = std::move(c);
  }
  return best;
}

}  // namespace arborist
