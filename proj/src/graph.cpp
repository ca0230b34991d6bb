#include "arborist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace arborist {
namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

}  // namespace

const Edge& Graph::edge(EdgeId id) const {
  if (id >= edges_.size()) raise(Errc::unknown_edge_id, "edge id " + std::to_string(id));
  return edges_[id];
}

std::span<const EdgeId> Graph::incoming(NodeId j) const {
  if (j >= node_count()) raise(Errc::unknown_edge_id, "node id " + node_str(j));
  return std::span<const EdgeId>(in_ids_).subspan(in_at_[j], in_at_[j + 1] - in_at_[j]);
}

std::span<const InEdge> Graph::incoming_packed(NodeId j) const {
  if (j >= node_count()) raise(Errc::unknown_edge_id, "node id " + node_str(j));
  return std::span<const InEdge>(in_packed_).subspan(in_at_[j], in_at_[j + 1] - in_at_[j]);
}

std::string_view Graph::label_of(const Edge& e) const noexcept {
  if (e.label < 0) return {};
  return labels_[static_cast<std::size_t>(e.label)];
}

std::int32_t Graph::intern_label(const std::string& text) {
  if (text.empty()) return -1;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == text) return static_cast<std::int32_t>(i);
  labels_.push_back(text);
  return static_cast<std::int32_t>(labels_.size() - 1);
}

Graph build_graph(std::size_t tokens, std::span<const EdgeInput> edges) {
  if (tokens == 0 || tokens >= kNoNode)
    raise(Errc::precondition, "token count must be at least 1");
  Graph g;
  g.tokens_ = static_cast<NodeId>(tokens);
  g.edges_.reserve(edges.size());
  for (const EdgeInput& in : edges) {
    if (in.dst == kRoot) raise(Errc::edge_into_root, node_str(in.src) + " -> root");
    if (in.src == in.dst) raise(Errc::self_loop, "at node " + node_str(in.src));
    if (in.src >= g.node_count() || in.dst >= g.node_count())
      raise(Errc::precondition, "endpoint out of range: " + node_str(in.src) + " -> " + node_str(in.dst));
    if (!std::isfinite(in.weight))
      raise(Errc::non_finite_weight, node_str(in.src) + " -> " + node_str(in.dst));
    Edge e;
    e.id = static_cast<EdgeId>(g.edges_.size());
    e.src = in.src;
    e.dst = in.dst;
    e.label = g.intern_label(in.label);
    e.weight = in.weight;
    g.edges_.push_back(e);
  }

  // Counting sort by dst; within a node the ids stay ascending.
  g.in_at_.assign(g.node_count() + 1, 0);
  for (const Edge& e : g.edges_) ++g.in_at_[e.dst + 1];
  for (std::size_t v = 1; v < g.in_at_.size(); ++v) g.in_at_[v] += g.in_at_[v - 1];
  g.in_ids_.resize(g.edges_.size());
  g.in_packed_.resize(g.edges_.size());
  std::vector<std::size_t> fill(g.in_at_.begin(), g.in_at_.end() - 1);
  for (const Edge& e : g.edges_) {
    std::size_t at = fill[e.dst]++;
    g.in_ids_[at] = e.id;
    g.in_packed_[at] = {e.weight, e.id, e.src};
  }
  return g;
}

Graph build_graph(std::size_t tokens, std::initializer_list<EdgeInput> edges) {
  return build_graph(tokens, std::span<const EdgeInput>(edges.begin(), edges.size()));
}

GraphView delete_root_edges(const GraphView& v, const Edge& e) {
  if (e.src != kRoot) raise(Errc::not_a_root_edge, "edge " + std::to_string(e.id));
  GraphView out = v;
  out.removed_.at(e.dst) = 1;
  return out;
}

bool EdgeSelection::total() const noexcept {
  for (std::size_t v = 1; v < chosen.size(); ++v)
    if (chosen[v] == kNoEdge) return false;
  return true;
}

std::vector<EdgeId> EdgeSelection::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(chosen.size());
  for (std::size_t v = 1; v < chosen.size(); ++v)
    if (chosen[v] != kNoEdge) out.push_back(chosen[v]);
  return out;
}

double total_weight(const Graph& g, std::span<const EdgeId> ids) {
  double sum = 0.0;
  for (EdgeId id : ids) sum += g.edge(id).weight;
  return sum;
}

namespace {

// Shared C1 walk: one incoming edge per token and no cycles implies every
// parent chain ends at the root.
bool one_per_node(const Graph& g, std::span<const EdgeId> ids, std::vector<EdgeId>& parent) {
  parent.assign(g.node_count(), kNoEdge);
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    if (parent[e.dst] != kNoEdge) return false;
    parent[e.dst] = id;
  }
  for (NodeId v = 1; v < g.node_count(); ++v)
    if (parent[v] == kNoEdge) return false;
  return true;
}

bool acyclic(const Graph& g, const std::vector<EdgeId>& parent) {
  std::vector<std::uint32_t> seen(g.node_count(), 0);
  for (NodeId start = 1; start < g.node_count(); ++start) {
    NodeId v = start;
    while (v != kRoot && seen[v] == 0) {
      seen[v] = start;
      v = g.edge(parent[v]).src;
    }
    if (v != kRoot && seen[v] == start) return false;  // walked into itself
  }
  return true;
}

}  // namespace

bool is_arborescence(const Graph& g, std::span<const EdgeId> ids) {
  std::vector<EdgeId> dedup(ids.begin(), ids.end());
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  if (dedup.size() != g.token_count()) {
    for (EdgeId id : dedup) g.edge(id);  // still validate ids
    return false;
  }
  std::vector<EdgeId> parent;
  if (!one_per_node(g, dedup, parent)) return false;
  return acyclic(g, parent);
}

bool is_dependency_tree(const Graph& g, std::span<const EdgeId> ids) {
  if (!is_arborescence(g, ids)) return false;
  std::size_t root_out = 0;
  for (EdgeId id : ids)
    if (g.edge(id).src == kRoot) ++root_out;
  return root_out == 1;
}

std::optional<Edge> best_incoming(const GraphView& v, NodeId j, bool exclude_root) {
  if (j == kRoot) raise(Errc::root_has_no_incoming, "queried incoming of the root");
  const Graph& g = v.graph();
  const Edge* best = nullptr;
  for (EdgeId id : g.incoming(j)) {
    const Edge& e = g.edge(id);
    if (exclude_root && e.src == kRoot) continue;
    if (!v.allows(e)) continue;
    if (best == nullptr || e.weight > best->weight) best = &e;
    // ids ascend, so the first maximum seen keeps winning ties
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<Edge> best_incoming(const Graph& g, NodeId j, bool exclude_root) {
  return best_incoming(GraphView(g), j, exclude_root);
}

std::vector<NodeId> selection_heads(const Graph& g, const EdgeSelection& sel) {
  std::vector<NodeId> heads(g.node_count(), kNoNode);
  for (NodeId v = 1; v < g.node_count(); ++v)
    if (v < sel.chosen.size() && sel.chosen[v] != kNoEdge)
      heads[v] = g.edge(sel.chosen[v]).src;
  return heads;
}

Graph sample_graph() {
  return build_graph(4, {
      {0, 1, 90.0},
      {0, 2, 40.0},
      {1, 3, 10.0},
      {2, 4, 60.0},
      {2, 3, 30.0},
      {3, 2, 50.0},
      {4, 3, 70.0},
      {4, 1, 20.0},
  });
}

}  // namespace arborist
