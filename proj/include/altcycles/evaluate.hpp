#pragma once

#include "altcycles/graph.hpp"

namespace altcycles {

// All evaluators throw PartialColoring when the colouring does not cover
// exactly the vertex set, and the value evaluators throw ImproperColoring on
// a monochromatic edge.

auto is_proper(const Graph & g, const Coloring & c) -> bool;

/// Largest number of colours seen in a closed neighbourhood.
auto local_value(const Graph & g, const Coloring & c) -> int;

/// Largest number of colours seen in a closed out-neighbourhood.
auto directed_local_value(const Orientation & o, const Coloring & c) -> int;
auto directed_local_value(const Digraph & d, const Coloring & c) -> int;

/// True iff no walk of length exactly 2s-1 joins two equally coloured
/// (possibly identical) vertices. s must be positive.
auto is_s_wide(const Graph & g, const Coloring & c, int s) -> bool;

} // namespace altcycles
