#pragma once

#include <optional>
#include <vector>

#include "altcycles/budget.hpp"
#include "altcycles/graph.hpp"

namespace altcycles {

/// Injective edge-preserving map from pattern into host (not necessarily
/// induced); entry v is the host index of pattern vertex v. nullopt means the
/// exhaustive search refuted the embedding.
auto find_subgraph_embedding(const Graph & pattern, const Graph & host, NodeBudget & budget)
    -> std::optional<std::vector<int>>;

/// Isomorphism via an embedding between graphs of equal order and size.
auto find_isomorphism(const Graph & a, const Graph & b, NodeBudget & budget) -> std::optional<std::vector<int>>;
auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

} // namespace altcycles
