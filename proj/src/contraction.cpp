#include "arborist/contraction.hpp"

#include <algorithm>
#include <string>

namespace arborist {
namespace {

void validate_cycle(const Graph& g, const Cycle& c) {
  const std::size_t sz = c.nodes.size();
  if (sz < 2 || c.internal_edges.size() != sz)
    raise(Errc::not_a_cycle, "need at least two nodes and one edge per node");
  for (std::size_t k = 0; k < sz; ++k) {
    NodeId node = c.nodes[k];
    NodeId prev = c.nodes[(k + sz - 1) % sz];
    if (node == kRoot) raise(Errc::not_a_cycle, "root cannot sit on a cycle");
    if (std::count(c.nodes.begin(), c.nodes.end(), node) != 1)
      raise(Errc::not_a_cycle, "repeated node " + std::to_string(node));
    const Edge& e = g.edge(c.internal_edges[k]);
    if (e.dst != node || e.src != prev)
      raise(Errc::not_a_cycle, "edge " + std::to_string(e.id) + " does not link the ring");
  }
}

}  // namespace

std::vector<EdgeId> break_cycle(const Cycle& c, NodeId j) {
  if (!c.contains(j)) raise(Errc::node_not_in_cycle, "node " + std::to_string(j));
  std::vector<EdgeId> out;
  out.reserve(c.nodes.size() - 1);
  for (std::size_t k = 0; k < c.nodes.size(); ++k)
    if (c.nodes[k] != j) out.push_back(c.internal_edges[k]);
  return out;
}

ContractedGraph contract(const Graph& g, const Cycle& c) {
  validate_cycle(g, c);

  ContractionRecord rec;
  rec.cycle = c;
  rec.node_map.assign(g.node_count(), kNoNode);
  rec.node_map[kRoot] = kRoot;
  NodeId next = 1;
  for (NodeId v = 1; v < g.node_count(); ++v)
    if (!c.contains(v)) rec.node_map[v] = next++;
  rec.supernode = next;  // highest id of the contracted graph
  for (NodeId v : c.nodes) rec.node_map[v] = rec.supernode;

  // Weight the cycle would keep if entered at each node.
  std::vector<double> entered_at(g.node_count(), 0.0);
  for (std::size_t k = 0; k < c.nodes.size(); ++k)
    entered_at[c.nodes[k]] = c.weight - g.edge(c.internal_edges[k]).weight;

  std::vector<EdgeInput> inputs;
  for (const Edge& e : g.edges()) {
    bool src_in = c.contains(e.src);
    bool dst_in = c.contains(e.dst);
    if (src_in && dst_in) continue;  // internal to the cycle, dropped
    EdgeInput in;
    in.src = rec.node_map[e.src];
    in.dst = rec.node_map[e.dst];
    in.weight = dst_in ? e.weight + entered_at[e.dst] : e.weight;
    in.label = std::string(g.label_of(e));
    rec.pi.push_back(e.id);
    rec.enter_break.push_back(dst_in ? e.dst : kNoNode);
    inputs.push_back(std::move(in));
  }

  ContractedGraph out{build_graph(rec.supernode, inputs), std::move(rec)};
  return out;
}

std::vector<EdgeId> stitch(std::span<const EdgeId> a_c, const ContractionRecord& rec) {
  EdgeId enter = kNoEdge;
  for (EdgeId id : a_c) {
    if (id >= rec.pi.size()) raise(Errc::unknown_edge_id, "edge id " + std::to_string(id));
    if (rec.enter_break[id] == kNoNode) continue;
    if (enter != kNoEdge) raise(Errc::multiple_enter_edges, "selection enters the cycle twice");
    enter = id;
  }
  if (enter == kNoEdge) raise(Errc::no_enter_edge, "selection never enters the cycle");

  std::vector<EdgeId> out;
  out.reserve(a_c.size() + rec.cycle.nodes.size() - 1);
  for (EdgeId id : a_c) out.push_back(rec.pi[id]);
  for (EdgeId id : break_cycle(rec.cycle, rec.enter_break[enter])) out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arborist
