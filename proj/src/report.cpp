#include "altcycles/report.hpp"

#include <algorithm>

#include "altcycles/evaluate.hpp"
#include "altcycles/oddcycles.hpp"
#include "altcycles/orient.hpp"

namespace altcycles {

auto ConstructionReport::all_passed() const -> bool
{
    return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.passed; });
}

auto ConstructionReport::find_check(const std::string & name) const -> const Check *
{
    for (const auto & c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {
    auto has_proper_coloring(const ConstructionReport & r) -> bool
    {
        return r.coloring && r.coloring->size() == r.graph().order() && is_proper(r.graph(), *r.coloring);
    }
}

auto run_check(const ConstructionReport & report, const std::string & name, std::optional<int> parameter,
    NodeBudget & budget) -> Check
{
    namespace cn = check_names;
    Check check{name, false, std::nullopt};
    const Orientation & o = report.orientation;
    try {
        if (name == cn::proper_coloring) {
            check.passed = has_proper_coloring(report);
        }
        else if (name == cn::directed_local_value_2) {
            if (has_proper_coloring(report)) {
                check.value = directed_local_value(o, *report.coloring);
                check.passed = *check.value <= 2;
            }
        }
        else if (name == cn::color_count) {
            if (report.coloring) {
                check.value = report.coloring->num_colors();
                check.passed = ! parameter || *parameter == *check.value;
            }
        }
        else if (name == cn::shortest_alternating) {
            auto result = all_shortest_odd_cycles_alternating(o, budget);
            check.value = result.cycles_checked;
            check.passed = result.all_alternating;
        }
        else if (name == cn::no_alternating_cycle) {
            check.passed = ! find_alternating_odd_cycle(o, budget).has_value();
        }
        else if (name == cn::sources_contain) {
            if (parameter) {
                int j = *parameter;
                check.value = j;
                check.passed = true;
                for (int v = 0; v < o.base().order(); ++v) {
                    const auto & label = o.base().label(v);
                    if (label.kind() != VertexLabel::Kind::Set)
                        continue;
                    const auto & xs = label.elements();
                    if (std::binary_search(xs.begin(), xs.end(), j) && o.in_degree(v) != 0)
                        check.passed = false;
                }
            }
        }
        else if (name == cn::schrijver_structure) {
            if (parameter) {
                check.value = *parameter;
                check.passed = schrijver_structure_holds(o.base(), *parameter);
            }
        }
    }
    catch (const BudgetExceeded &) {
        throw;
    }
    catch (const Error &) {
        check.passed = false;
    }
    return check;
}

auto verify_report(const ConstructionReport & report, NodeBudget & budget) -> bool
{
    for (const auto & c : report.checks) {
        Check again = run_check(report, c.name, c.value, budget);
        if (! again.passed || again.value != c.value)
            return false;
    }
    return true;
}

} // namespace altcycles
