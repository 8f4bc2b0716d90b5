#pragma once

#include <memory>

#include <doctest.h>

#include "altcycles/error.hpp"
#include "altcycles/graph.hpp"

#define CHECK_ERROR_KIND(expr, expected_kind)                                                                          \
    do {                                                                                                               \
        bool thrown_ = false;                                                                                          \
        try {                                                                                                          \
            (void)(expr);                                                                                              \
        }                                                                                                              \
        catch (const altcycles::Error & e_) {                                                                          \
            thrown_ = true;                                                                                            \
            CHECK_MESSAGE(e_.kind() == (expected_kind), "got " << altcycles::to_string(e_.kind()));                    \
        }                                                                                                              \
        CHECK_MESSAGE(thrown_, "expected " << altcycles::to_string(expected_kind));                                   \
    } while (false)

namespace testing {

inline auto I(int n) -> altcycles::VertexLabel { return altcycles::VertexLabel::integer(n); }

inline auto ints(int n) -> std::vector<altcycles::VertexLabel>
{
    std::vector<altcycles::VertexLabel> labels;
    for (int v = 0; v < n; ++v)
        labels.push_back(I(v));
    return labels;
}

inline auto shared(altcycles::Graph g) -> std::shared_ptr<const altcycles::Graph>
{
    return std::make_shared<const altcycles::Graph>(std::move(g));
}

/// Orientation from integer arcs on an integer-labelled graph.
inline auto orient_ints(const altcycles::Graph & g, const std::vector<std::pair<int, int>> & arcs)
    -> altcycles::Orientation
{
    std::vector<altcycles::LabelPair> pairs;
    for (auto [u, v] : arcs)
        pairs.emplace_back(I(u), I(v));
    return altcycles::orient(shared(g), pairs);
}

inline auto cyclic_triangle() -> altcycles::Orientation
{
    return orient_ints(altcycles::Graph::from_indices(ints(3), {{0, 1}, {1, 2}, {0, 2}}), {{0, 1}, {1, 2}, {2, 0}});
}

inline auto transitive_triangle() -> altcycles::Orientation
{
    return orient_ints(altcycles::Graph::from_indices(ints(3), {{0, 1}, {1, 2}, {0, 2}}), {{0, 1}, {1, 2}, {0, 2}});
}

} // namespace testing
