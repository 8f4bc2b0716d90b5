#pragma once

#include <optional>

#include "altcycles/budget.hpp"
#include "altcycles/graph.hpp"

namespace altcycles {

/// Exact k-colourability: DSATUR branching with forward checking and
/// new-colour symmetry breaking. nullopt is a complete refutation.
auto find_k_coloring(const Graph & g, int k, NodeBudget & budget) -> std::optional<Coloring>;

/// Greedy DSATUR colouring, no backtracking.
auto dsatur_coloring(const Graph & g) -> Coloring;

/// Size of a clique grown greedily from every start vertex.
auto greedy_clique_bound(const Graph & g) -> int;

/// Exact chromatic number. On budget exhaustion the thrown BudgetExceeded
/// carries the best lower and upper bounds found.
auto chromatic_number(const Graph & g, NodeBudget & budget) -> int;
auto chromatic_number(const Graph & g) -> int;

/// Exact local chromatic number by exhaustive minimisation over proper
/// colourings with any number of colours.
auto local_chromatic_number(const Graph & g, NodeBudget & budget) -> int;

} // namespace altcycles
