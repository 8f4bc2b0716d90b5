#pragma once

#include <filesystem>
#include <string>

#include "altcycles/graph.hpp"

namespace altcycles {

/// Graphviz text. Orientations become digraphs; colour i becomes a node fill
/// taken from a fixed palette (cycled past its end) and a "c<i>" tag in the
/// node label. Output depends only on the inputs.
auto to_dot(const Graph & g, const Coloring * coloring = nullptr) -> std::string;
auto to_dot(const Orientation & o, const Coloring * coloring = nullptr) -> std::string;

/// Errors: IoError.
void export_dot(const Graph & g, const Coloring * coloring, const std::filesystem::path & path);
void export_dot(const Orientation & o, const Coloring * coloring, const std::filesystem::path & path);

} // namespace altcycles
