#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arborist/error.hpp"

namespace arborist {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kRoot = 0;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

// label is an index into the owning graph's label table, -1 when absent.
// Kept small on purpose; dense benchmarks hold millions of these.
struct Edge {
  EdgeId id;
  NodeId src;
  NodeId dst;
  std::int32_t label;
  double weight;
};

// Incoming-list entry carrying just what a decoder scan touches, so dense
// passes read sequentially instead of chasing ids through the edge table.
struct InEdge {
  double weight;
  EdgeId id;
  NodeId src;
};

struct EdgeInput {
  NodeId src;
  NodeId dst;
  double weight;
  std::string label{};
};

// Weighted rooted directed multigraph over nodes {0..n}, node 0 the root.
// Immutable once built. Parallel edges are allowed and kept; self loops and
// edges into the root are rejected at build time.
class Graph {
 public:
  NodeId token_count() const noexcept { return tokens_; }
  NodeId node_count() const noexcept { return tokens_ + 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId id) const;
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Ids of edges with dst == j, ascending (= insertion order).
  std::span<const EdgeId> incoming(NodeId j) const;

  // Same edges in the same order, packed for scanning.
  std::span<const InEdge> incoming_packed(NodeId j) const;

  std::string_view label_of(const Edge& e) const noexcept;
  std::int32_t intern_label(const std::string& text);  // used by builders only

  friend Graph build_graph(std::size_t tokens, std::span<const EdgeInput> edges);

 private:
  NodeId tokens_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> in_ids_;     // incoming edge ids grouped by dst
  std::vector<InEdge> in_packed_;  // parallel to in_ids_
  std::vector<std::size_t> in_at_; // node -> offset into in_ids_
  std::vector<std::string> labels_;
};

Graph build_graph(std::size_t tokens, std::span<const EdgeInput> edges);
Graph build_graph(std::size_t tokens, std::initializer_list<EdgeInput> edges);

// A graph with some of its root edges masked out. The decoders and the
// oracle work against views so candidate removals never copy edge data.
class GraphView {
 public:
  explicit GraphView(const Graph& g)
      : graph_(&g), removed_(g.node_count(), 0) {}

  const Graph& graph() const noexcept { return *graph_; }

  bool allows(const Edge& e) const noexcept { return e.src != kRoot || allows_root(e.dst); }

  bool allows_root(NodeId dst) const noexcept {
    if (only_root_target_ != kNoNode && dst != only_root_target_) return false;
    return removed_[dst] == 0;
  }

  bool root_edges_removed(NodeId target) const { return removed_.at(target) != 0; }

  // Same view with root edges restricted to one target. Used by the
  // one-tree-per-root-choice baseline.
  GraphView with_only_root_target(NodeId target) const {
    GraphView out = *this;
    out.only_root_target_ = target;
    return out;
  }

  friend GraphView delete_root_edges(const GraphView& v, const Edge& e);

 private:
  const Graph* graph_;
  std::vector<std::uint8_t> removed_;  // per target node, all root edges gone
  NodeId only_root_target_ = kNoNode;
};

// Removes every root edge sharing endpoints with e (parallel copies too).
// e must leave the root.
GraphView delete_root_edges(const GraphView& v, const Edge& e);

// Incoming edge per non-root node. chosen[j] == kNoEdge means unset;
// chosen[0] is unused. total_weight is the sum over set entries.
struct EdgeSelection {
  std::vector<EdgeId> chosen;
  double total_weight = 0.0;

  bool total() const noexcept;
  std::vector<EdgeId> edge_ids() const;  // set entries, ascending node order
};

double total_weight(const Graph& g, std::span<const EdgeId> ids);

// C1: exactly one incoming edge per non-root node, every node reachable
// from the root, no cycles.
bool is_arborescence(const Graph& g, std::span<const EdgeId> ids);

// C1 plus exactly one edge leaving the root.
bool is_dependency_tree(const Graph& g, std::span<const EdgeId> ids);

// Heaviest incoming edge of j visible in the view; ties go to the lowest
// edge id. exclude_root drops root-sourced candidates.
std::optional<Edge> best_incoming(const GraphView& v, NodeId j, bool exclude_root = false);
std::optional<Edge> best_incoming(const Graph& g, NodeId j, bool exclude_root = false);

// Head node of each token under a total selection, indexed 1..n.
std::vector<NodeId> selection_heads(const Graph& g, const EdgeSelection& sel);

// Four-token sentence whose greedy selection contains a cycle; the worked
// example used across docs and tests.
Graph sample_graph();

}  // namespace arborist
