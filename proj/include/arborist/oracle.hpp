#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arborist/decode.hpp"

namespace arborist {

struct ScoredTree {
  std::vector<EdgeId> edges;  // one per token, sorted by id
  double weight = 0.0;
};

// Exhaustive enumeration of arborescences (or dependency trees when
// constrained). Independent of the decoders on purpose: it tries every
// combination of one incoming edge per node and keeps the acyclic ones.
// Throws too_large beyond max_tokens.
std::vector<ScoredTree> enumerate_trees(const GraphView& v, bool constrained,
                                        std::size_t max_tokens = 8);
std::vector<ScoredTree> enumerate_trees(const Graph& g, bool constrained,
                                        std::size_t max_tokens = 8);

// Max-weight tree by the same enumeration, without materializing the rest.
// Ties keep the first combination in enumeration order. nullopt when no
// tree exists.
std::optional<ScoredTree> best_tree(const GraphView& v, bool constrained,
                                    std::size_t max_tokens = 8);
std::optional<ScoredTree> best_tree(const Graph& g, bool constrained,
                                    std::size_t max_tokens = 8);

// Reference dependency-tree decoder: one unconstrained decode per candidate
// root attachment, root edges restricted to that target, best result wins.
// Ties prefer the lower target id. Throws no_dependency_tree when every
// attachment fails.
EdgeSelection n_run_baseline(const GraphView& v);
EdgeSelection n_run_baseline(const Graph& g);

}  // namespace arborist
