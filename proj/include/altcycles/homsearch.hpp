#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "altcycles/budget.hpp"
#include "altcycles/graph.hpp"
#include "altcycles/report.hpp"

namespace altcycles {

/// Vertex map by index: image[v] is the target index of source vertex v.
struct HomomorphismMap {
    std::vector<int> image;

    auto size() const -> int { return static_cast<int>(image.size()); }
    auto operator[](int v) const -> int { return image[v]; }
    /// this followed by next.
    auto then(const HomomorphismMap & next) const -> HomomorphismMap;

    auto operator==(const HomomorphismMap &) const -> bool = default;
};

/// Throws PartialMap when the map is not total on src or leaves dst.
auto verify_homomorphism(const Graph & src, const Graph & dst, const HomomorphismMap & map) -> bool;
auto verify_homomorphism(const Digraph & src, const Digraph & dst, const HomomorphismMap & map) -> bool;

enum class Propagation { ForwardChecking, ArcConsistency };

struct SearchConfig {
    std::uint64_t node_budget = 50'000'000;
    /// Shuffles the value order when set; otherwise values go in label order.
    std::optional<std::uint64_t> seed;
    Propagation propagation = Propagation::ArcConsistency;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool complete = false;
};

struct HomSearchResult {
    std::optional<HomomorphismMap> map;
    SearchStats stats;
};

/// Exact search. An empty result is a complete refutation; running out of
/// budget throws BudgetExceeded instead.
auto search_homomorphism(const Graph & src, const Graph & dst, const SearchConfig & cfg) -> HomSearchResult;
auto search_homomorphism(const Digraph & src, const Digraph & dst, const SearchConfig & cfg) -> HomSearchResult;
auto find_homomorphism(const Graph & src, const Graph & dst, const SearchConfig & cfg = {})
    -> std::optional<HomomorphismMap>;
auto find_homomorphism(const Digraph & src, const Digraph & dst, const SearchConfig & cfg = {})
    -> std::optional<HomomorphismMap>;

struct ShiftWitness {
    int m = 0;
    HomomorphismMap map;
};

/// Smallest m in [2, m_max] with g -> shift_graph(m). One budget is shared by
/// all the searches.
auto hom_to_some_shift(const Graph & g, int m_max, const SearchConfig & cfg = {}) -> std::optional<ShiftWitness>;

/// Reads a homomorphism into shift_graph(m) off a colouring whose closed
/// out-neighbourhoods have at most two colours: v goes to (c(v), colour of
/// its out-neighbours), sinks to (c(v), c(v)+1 mod m). Throws ValueNotTwo.
auto shift_hom_from_report(const ConstructionReport & report) -> ShiftWitness;

using OrientationPredicate = std::function<bool(const Orientation &, NodeBudget &)>;

struct OrientationSweep {
    bool holds_for_all = true;
    std::optional<Orientation> counterexample;
    std::uint64_t checked = 0;
};

/// Evaluates the predicate on every orientation of g, in mask order. With
/// reversal_symmetry the first edge stays fixed, which is only sound for
/// predicates invariant under reversing all arcs. Throws BudgetExceeded
/// up front when the sweep is larger than the remaining budget.
auto exhaustive_orientation_check(const Graph & g, const OrientationPredicate & predicate, NodeBudget & budget,
    bool reversal_symmetry = false) -> OrientationSweep;

/// Predicate for sweeps: the orientation contains an alternating odd cycle.
auto contains_alternating_odd_cycle(const Orientation & o, NodeBudget & budget) -> bool;

struct JointSearchResult {
    std::optional<ConstructionReport> report;
    SearchStats stats;
};

/// Searches orientations and colourings together for a proper colouring with
/// at most color_budget colours whose closed out-neighbourhoods carry at most
/// two colours. Empty means no such pair exists. Supports up to 64 vertices.
auto joint_orientation_coloring_search(std::shared_ptr<const Graph> g, int color_budget, const SearchConfig & cfg = {})
    -> JointSearchResult;
auto joint_orientation_coloring_search(const Graph & g, int color_budget, const SearchConfig & cfg = {})
    -> std::optional<ConstructionReport>;

} // namespace altcycles
