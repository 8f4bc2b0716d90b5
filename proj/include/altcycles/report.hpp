#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altcycles/budget.hpp"
#include "altcycles/graph.hpp"

namespace altcycles {

/// A named verification outcome. Some checks carry a parameter (the element
/// j for sources_contain_element, k for schrijver_structure) or a measured
/// value (color_count).
struct Check {
    std::string name;
    bool passed = false;
    std::optional<int> value;

    auto operator==(const Check &) const -> bool = default;
};

/// Output of a construction: the orientation, an optional colouring and the
/// checks that passed when it was built.
struct ConstructionReport {
    /// Family spec of the base graph when it came from a generator, else empty.
    std::string graph_spec;
    Orientation orientation;
    std::optional<Coloring> coloring;
    std::vector<Check> checks;

    auto graph() const -> const Graph & { return orientation.base(); }
    auto all_passed() const -> bool;
    auto find_check(const std::string & name) const -> const Check *;
};

namespace check_names {
    inline constexpr const char * proper_coloring = "proper_coloring";
    inline constexpr const char * directed_local_value_2 = "directed_local_value_2";
    inline constexpr const char * color_count = "color_count";
    inline constexpr const char * shortest_alternating = "all_shortest_odd_cycles_alternating";
    inline constexpr const char * no_alternating_cycle = "no_alternating_odd_cycle";
    inline constexpr const char * sources_contain = "sources_contain_element";
    inline constexpr const char * schrijver_structure = "schrijver_structure";
}

/// Evaluates one named check against the report's orientation and colouring.
/// Unknown names fail.
auto run_check(const ConstructionReport & report, const std::string & name, std::optional<int> parameter,
    NodeBudget & budget) -> Check;

/// Re-runs every listed check; true iff all of them pass again.
auto verify_report(const ConstructionReport & report, NodeBudget & budget) -> bool;

} // namespace altcycles
