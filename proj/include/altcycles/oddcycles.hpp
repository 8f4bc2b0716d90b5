#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "altcycles/budget.hpp"
#include "altcycles/graph.hpp"

namespace altcycles {

/// Simple cycle as a vertex index sequence. Canonical form starts at the
/// smallest vertex and continues towards its smaller cycle neighbour.
struct Cycle {
    std::vector<int> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()); }
    auto operator==(const Cycle &) const -> bool = default;
    auto operator<=>(const Cycle &) const = default;
};

auto canonical_cycle(std::vector<int> vertices) -> Cycle;

/// Throws ForeignCycle unless c is a simple cycle (length >= 3) of g.
void validate_cycle(const Graph & g, const Cycle & c);

/// In/out degrees counted along the cycle's own edges only.
struct AlternationProfile {
    int sources = 0;
    int sinks = 0;
    std::vector<int> mixed;

    auto operator==(const AlternationProfile &) const -> bool = default;
};

auto is_bipartite(const Graph & g) -> bool;

/// Length of a shortest odd cycle, nullopt iff g is bipartite. Breadth-first
/// search over (vertex, walk parity) states from every vertex.
auto odd_girth(const Graph & g) -> std::optional<int>;

/// Every simple cycle of length odd_girth(g), canonical and sorted. Throws
/// BadParameters on bipartite input.
auto enumerate_shortest_odd_cycles(const Graph & g, NodeBudget & budget) -> std::vector<Cycle>;
/// Every simple cycle of the given length, canonical and sorted.
auto enumerate_cycles(const Graph & g, int length, NodeBudget & budget) -> std::vector<Cycle>;

auto alternation_profile(const Orientation & o, const Cycle & c) -> AlternationProfile;
/// Odd length with exactly one vertex that has both an in-arc and an out-arc on the cycle.
auto is_alternating(const Orientation & o, const Cycle & c) -> bool;

/// Exhaustive search anchored at each candidate mixed vertex u->v->w, extending
/// a direction-alternating simple path back to an in-neighbour of the anchor.
auto find_alternating_odd_cycle(const Orientation & o, NodeBudget & budget) -> std::optional<Cycle>;

/// Proper colouring whose closed out-neighbourhoods carry at most two colours,
/// or nullopt when none exists.
auto certify_no_alternating_odd_cycle(const Orientation & o, NodeBudget & budget) -> std::optional<Coloring>;

/// Exactly one of: an alternating odd cycle, or a witness colouring.
struct Certificate {
    std::variant<Cycle, Coloring> witness;

    auto found_cycle() const -> bool { return std::holds_alternative<Cycle>(witness); }
    auto cycle() const -> const Cycle & { return std::get<Cycle>(witness); }
    auto coloring() const -> const Coloring & { return std::get<Coloring>(witness); }
};

/// Runs both searches and cross-checks them; disagreement raises
/// InconsistentCertificates.
auto alternating_verdict(const Orientation & o, NodeBudget & budget) -> Certificate;

/// Re-checks a certificate against an orientation.
auto verify_certificate(const Orientation & o, const Certificate & cert) -> bool;

struct ShortestCycleCheck {
    bool all_alternating = true;
    std::optional<Cycle> counterexample;
    int cycles_checked = 0;
};

auto all_shortest_odd_cycles_alternating(const Orientation & o, NodeBudget & budget) -> ShortestCycleCheck;
/// Same check against a precomputed cycle list (for sweeps over many orientations).
auto all_alternating(const Orientation & o, const std::vector<Cycle> & cycles) -> ShortestCycleCheck;

} // namespace altcycles
