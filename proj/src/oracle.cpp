#include "arborist/oracle.hpp"

#include <algorithm>
#include <string>

namespace arborist {
namespace {

// Odometer over one incoming-edge choice per node. Weight and root degree
// update incrementally; the tree check restamps per combination.
template <typename Fn>
void each_tree(const GraphView& v, bool constrained, std::size_t max_tokens, Fn&& fn) {
  const Graph& g = v.graph();
  const NodeId n = g.token_count();
  if (n > max_tokens) raise(Errc::too_large, std::to_string(n) + " tokens");

  std::vector<std::vector<EdgeId>> cand(n + 1);
  for (NodeId j = 1; j <= n; ++j) {
    for (EdgeId id : g.incoming(j))
      if (v.allows(g.edge(id))) cand[j].push_back(id);
    if (cand[j].empty()) return;  // nothing can attach j
  }

  std::vector<std::size_t> idx(n + 1, 0);
  std::vector<EdgeId> sel(n + 1, kNoEdge);
  std::vector<NodeId> head(n + 1, kRoot);
  double w = 0.0;
  std::size_t root_deg = 0;
  for (NodeId j = 1; j <= n; ++j) {
    const Edge& e = g.edge(cand[j][0]);
    sel[j] = e.id;
    head[j] = e.src;
    w += e.weight;
    root_deg += e.src == kRoot;
  }

  std::vector<std::uint64_t> seen(n + 1, 0);
  std::vector<std::uint8_t> safe(n + 1, 0);
  std::uint64_t combo = 0;
  std::vector<NodeId> path;

  for (;;) {
    if (!constrained || root_deg == 1) {
      ++combo;
      bool ok = true;
      for (NodeId s = 1; s <= n && ok; ++s) {
        if (seen[s] == combo && safe[s]) continue;
        path.clear();
        NodeId u = s;
        while (u != kRoot) {
          if (seen[u] == combo) {
            if (!safe[u]) ok = false;  // rejoined the walk in progress
            break;
          }
          seen[u] = combo;
          safe[u] = 0;
          path.push_back(u);
          u = head[u];
        }
        if (ok)
          for (NodeId p : path) safe[p] = 1;
      }
      if (ok) fn(std::span<const EdgeId>(sel.data() + 1, n), w);
    }

    NodeId j = 1;
    for (; j <= n; ++j) {
      const Edge& old = g.edge(sel[j]);
      w -= old.weight;
      root_deg -= old.src == kRoot;
      std::size_t next = idx[j] + 1;
      if (next == cand[j].size()) next = 0;
      idx[j] = next;
      const Edge& e = g.edge(cand[j][next]);
      sel[j] = e.id;
      head[j] = e.src;
      w += e.weight;
      root_deg += e.src == kRoot;
      if (next != 0) break;  // no carry
    }
    if (j > n) break;  // odometer wrapped around
  }
}

}  // namespace

std::vector<ScoredTree> enumerate_trees(const GraphView& v, bool constrained,
                                        std::size_t max_tokens) {
  const Graph& g = v.graph();
  std::vector<ScoredTree> out;
  each_tree(v, constrained, max_tokens, [&](std::span<const EdgeId> ids, double) {
    ScoredTree t;
    t.edges.assign(ids.begin(), ids.end());
    std::sort(t.edges.begin(), t.edges.end());
    t.weight = total_weight(g, t.edges);
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<ScoredTree> enumerate_trees(const Graph& g, bool constrained,
                                        std::size_t max_tokens) {
  return enumerate_trees(GraphView(g), constrained, max_tokens);
}

std::optional<ScoredTree> best_tree(const GraphView& v, bool constrained,
                                    std::size_t max_tokens) {
  const Graph& g = v.graph();
  std::optional<ScoredTree> best;
  double best_w = 0.0;
  each_tree(v, constrained, max_tokens, [&](std::span<const EdgeId> ids, double w) {
    if (best && w <= best_w) return;
    best_w = w;
    if (!best) best.emplace();
    best->edges.assign(ids.begin(), ids.end());
  });
  if (best) {
    std::sort(best->edges.begin(), best->edges.end());
    best->weight = total_weight(g, best->edges);
  }
  return best;
}

std::optional<ScoredTree> best_tree(const Graph& g, bool constrained, std::size_t max_tokens) {
  return best_tree(GraphView(g), constrained, max_tokens);
}

EdgeSelection n_run_baseline(const GraphView& v) {
  const Graph& g = v.graph();
  std::optional<EdgeSelection> best;
  for (NodeId t = 1; t < g.node_count(); ++t) {
    EdgeSelection sel;
    try {
      sel = decode_mwa(v.with_only_root_target(t));
    } catch (const Error& e) {
      if (e.code() == Errc::no_arborescence) continue;
      throw;
    }
    if (!best || sel.total_weight > best->total_weight) best = std::move(sel);
  }
  if (!best) raise(Errc::no_dependency_tree, "no root attachment yields a tree");
  return *std::move(best);
}

EdgeSelection n_run_baseline(const Graph& g) { return n_run_baseline(GraphView(g)); }

}  // namespace arborist
