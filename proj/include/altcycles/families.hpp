#pragma once

#include <string>
#include <vector>

#include "altcycles/graph.hpp"

namespace altcycles {

/// Generators for the named graph families. All are deterministic; vertex
/// labels follow the family's natural names (k-subsets, level pairs plus apex,
/// ordered pairs, plain integers).

auto complete(int n) -> Graph;
auto cycle(int n) -> Graph;
/// Cycle 0..n-1 plus hub vertex n adjacent to all of it.
auto wheel(int n) -> Graph;
/// Cycle 0..n-1 plus the n/2 long diagonals; n even.
auto moebius(int n) -> Graph;

/// k-subsets of [n], adjacent when disjoint. Requires n >= 2k >= 2.
auto kneser(int n, int k) -> Graph;
/// Induced subgraph of kneser(n,k) on subsets with no two cyclically
/// consecutive elements (the pair {1,n} counts as consecutive).
auto schrijver(int n, int k) -> Graph;

/// r-level cone over g: vertices (v,i) for 0 <= i < r plus the apex z.
auto generalized_mycielskian(const Graph & g, int r) -> Graph;
/// Folds generalized_mycielskian over the levels, starting from K_2.
auto iterated_mycielski(const std::vector<int> & levels) -> Graph;

/// Vertices 0..p-1, a ~ b iff q <= |a-b| <= p-q. Requires p >= 2q >= 2.
auto rational_complete(int p, int q) -> Graph;

/// Symmetric shift graph on ordered pairs (i,j) of distinct elements of [m].
auto shift_graph(int m) -> Graph;
/// Arcs (i,j) -> (j,k) for every k != j, so {(i,j),(j,i)} is a digon.
auto directed_shift_graph(int m) -> Digraph;

/// Folded 5-cube: 4-bit strings, adjacent when they differ in one bit or in all four.
auto clebsch() -> Graph;
/// Mycielskian of C_5 with vertices renamed 0..10.
auto grotzsch() -> Graph;

/// Replaces every label by its index.
auto relabel_to_integers(const Graph & g) -> Graph;

enum class FamilyKind {
    Kneser,
    Schrijver,
    Mycielski,
    Rational,
    Shift,
    DirectedShift,
    Clebsch,
    Grotzsch,
    Wheel,
    Cycle,
    Complete,
    Moebius,
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;

    auto operator==(const FamilySpec &) const -> bool = default;
};

/// Parses kneser:n,k | schrijver:n,k | myc:r1-r2-... | rat:p,q | shift:m |
/// dshift:m | clebsch | grotzsch | wheel:n | cycle:n | complete:n | moebius:n.
auto parse_family_spec(const std::string & text) -> FamilySpec;
auto to_string(const FamilySpec & spec) -> std::string;
/// Throws BadParameters for the directed shift family; use build_digraph.
auto build_graph(const FamilySpec & spec) -> Graph;
auto build_digraph(const FamilySpec & spec) -> Digraph;

} // namespace altcycles
