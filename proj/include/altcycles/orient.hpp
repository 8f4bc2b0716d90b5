#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "altcycles/budget.hpp"
#include "altcycles/graph.hpp"
#include "altcycles/homsearch.hpp"
#include "altcycles/oddcycles.hpp"
#include "altcycles/report.hpp"

namespace altcycles {

/// Tie rule for edges a construction leaves free: smaller label -> larger
/// label unless a seed is given, in which case each free edge flips a coin.
struct TieRule {
    std::optional<std::uint64_t> seed;
};

/// Colours 0 -> 1 -> 2 -> 0 on a proper colouring with at most three
/// colours. Errors: TooManyColors, ImproperColoring.
auto three_color_orientation(std::shared_ptr<const Graph> g, const Coloring & c) -> ConstructionReport;

/// Orients each edge like its image in target. Digon images fall back to the
/// smaller-to-larger label rule. When every target label is a pair (a
/// directed shift graph) the first coordinate becomes the colouring.
/// Errors: NotAHomomorphism.
auto pullback_orientation(std::shared_ptr<const Graph> g, const Digraph & target, const HomomorphismMap & hom)
    -> ConstructionReport;

/// On kneser(m(2k+1), mk): every vertex whose set contains j is a source,
/// the remaining edges follow the tie rule. Errors: BadParameters.
auto source_orientation_kneser(int m, int k, int j, const TieRule & tie = {}, NodeBudget * budget = nullptr)
    -> ConstructionReport;

/// Two sides plus the edges inside them, which form a matching.
struct Partition {
    std::vector<int> side_a;
    std::vector<int> side_b;
    std::vector<std::pair<int, int>> matching;

    auto operator==(const Partition &) const -> bool = default;
};

/// Throws InvalidPartition unless p is a valid bipartite-plus-matching split of g.
void validate_partition(const Graph & g, const Partition & p);

/// Searches side assignments in which every vertex has at most one neighbour
/// on its own side and every shortest odd cycle uses exactly one same-side
/// edge. Empty means the search space is exhausted.
auto find_bipartite_matching_partition(const Graph & g, NodeBudget & budget) -> std::optional<Partition>;

/// Crossing edges A -> B, matching edges by the tie rule.
/// Errors: InvalidPartition.
auto partition_orientation(std::shared_ptr<const Graph> g, const Partition & p, const TieRule & tie = {},
    NodeBudget * budget = nullptr) -> ConstructionReport;

/// The four-colouring of schrijver(2k+2, k) built around the odd-element
/// and even-element k-sets. Errors: BadParameters, StructureMismatch.
auto schrijver4_construction(int k, NodeBudget & budget) -> ConstructionReport;

/// Checks the odd/even block structure of schrijver(2k+2, k) used above.
auto schrijver_structure_holds(const Graph & g, int k) -> bool;

/// M_{r_from}(g) -> M_{r_to}(g) collapsing the lowest levels, apex to apex.
/// Verified before return. Errors: BadParameters, NotAHomomorphism.
auto mycielski_level_map(const Graph & g, int r_from, int r_to) -> HomomorphismMap;

/// Lifts f: g -> h to M_r(g) -> M_r(h) levelwise, apex to apex.
/// Errors: NotAHomomorphism.
auto mycielski_functor_map(const Graph & g, const Graph & h, const HomomorphismMap & f, int r) -> HomomorphismMap;

/// Orientation in which every shortest odd cycle has exactly one mixed
/// vertex, if one exists. Edges outside shortest odd cycles follow the
/// smaller-to-larger rule.
auto search_shortest_alternating_orientation(std::shared_ptr<const Graph> g, NodeBudget & budget)
    -> std::optional<Orientation>;

} // namespace altcycles
