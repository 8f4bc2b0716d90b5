#pragma once

#include <cstdint>
#include <vector>

#include "altcycles/graph.hpp"

namespace altcycles {

/// Reproducible random orientations: each instance has between 2 and
/// max_vertices integer-labelled vertices (uniform), every pair is an edge
/// with probability 1/2 and every edge gets a uniform direction. Draws come
/// straight from a 64-bit Mersenne Twister, so output is identical on every
/// platform. Requires 1 <= max_vertices <= 12.
auto random_digraph_corpus(int count, int max_vertices, std::uint64_t seed) -> std::vector<Orientation>;

} // namespace altcycles
