#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "altcycles/label.hpp"

namespace altcycles {

using LabelPair = std::pair<VertexLabel, VertexLabel>;

/// Immutable simple undirected graph. Vertices are kept sorted by label, so a
/// vertex index doubles as its rank in the canonical label order. Edges are
/// stored as index pairs (u < v) in lexicographic order.
class Graph {
public:
    Graph() = default;

    auto order() const noexcept -> int { return static_cast<int>(labels_.size()); }
    auto size() const noexcept -> int { return static_cast<int>(edges_.size()); }

    auto labels() const noexcept -> const std::vector<VertexLabel> & { return labels_; }
    auto label(int v) const -> const VertexLabel & { return labels_[v]; }
    auto find(const VertexLabel & label) const -> std::optional<int>;
    /// Throws UnknownEndpoint when the label is not a vertex.
    auto index_of(const VertexLabel & label) const -> int;

    auto edges() const noexcept -> const std::vector<std::pair<int, int>> & { return edges_; }
    auto neighbors(int v) const -> std::span<const int> { return adjacency_[v]; }
    auto degree(int v) const -> int { return static_cast<int>(adjacency_[v].size()); }
    auto adjacent(int u, int v) const -> bool { return edge_ids_[index(u, v)] >= 0; }
    /// Position of edge {u,v} in edges(), or -1.
    auto edge_id(int u, int v) const -> int { return edge_ids_[index(u, v)]; }

    auto operator==(const Graph & other) const -> bool
    {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

    /// Builds from already-validated parts: labels sorted and distinct,
    /// edges as index pairs without loops. Duplicate pairs are merged.
    static auto from_indices(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> edges) -> Graph;

private:
    auto index(int u, int v) const -> std::size_t { return static_cast<std::size_t>(u) * labels_.size() + v; }

    std::vector<VertexLabel> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> edge_ids_;
};

/// Validates and canonicalizes. Errors: DuplicateVertex, UnknownEndpoint, SelfLoop.
auto make_graph(std::vector<VertexLabel> vertices, const std::vector<LabelPair> & edges) -> Graph;

/// Digraph without loops; opposite arcs may both be present.
class Digraph {
public:
    Digraph() = default;

    auto order() const noexcept -> int { return static_cast<int>(labels_.size()); }
    auto labels() const noexcept -> const std::vector<VertexLabel> & { return labels_; }
    auto label(int v) const -> const VertexLabel & { return labels_[v]; }
    auto find(const VertexLabel & label) const -> std::optional<int>;
    auto index_of(const VertexLabel & label) const -> int;

    auto arcs() const noexcept -> const std::vector<std::pair<int, int>> & { return arcs_; }
    auto out_neighbors(int v) const -> std::span<const int> { return out_[v]; }
    auto in_neighbors(int v) const -> std::span<const int> { return in_[v]; }
    auto has_arc(int u, int v) const -> bool { return arc_matrix_[static_cast<std::size_t>(u) * labels_.size() + v] != 0; }

    static auto from_indices(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> arcs) -> Digraph;

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::uint8_t> arc_matrix_;
};

auto make_digraph(std::vector<VertexLabel> vertices, const std::vector<LabelPair> & arcs) -> Digraph;
auto underlying(const Digraph & d) -> Graph;

/// One direction per edge of a shared base graph.
class Orientation {
public:
    /// forward[e] is true when edge e = (u,v), u < v, points u -> v.
    Orientation(std::shared_ptr<const Graph> base, std::vector<bool> forward);

    auto base() const noexcept -> const Graph & { return *base_; }
    auto base_ptr() const noexcept -> const std::shared_ptr<const Graph> & { return base_; }
    auto forward() const noexcept -> const std::vector<bool> & { return forward_; }

    auto has_arc(int u, int v) const -> bool;
    auto tail(int edge) const -> int;
    auto head(int edge) const -> int;
    auto arcs() const -> std::vector<std::pair<int, int>>;
    auto out_neighbors(int v) const -> std::vector<int>;
    auto in_neighbors(int v) const -> std::vector<int>;
    auto out_degree(int v) const -> int;
    auto in_degree(int v) const -> int;

    auto reversed() const -> Orientation;
    auto to_digraph() const -> Digraph;

    auto operator==(const Orientation & other) const -> bool
    {
        return *base_ == *other.base_ && forward_ == other.forward_;
    }

private:
    std::shared_ptr<const Graph> base_;
    std::vector<bool> forward_;
};

/// Returns the ordered pair chosen for the edge, or nullopt if the rule has no answer.
using OrientationRule = std::function<std::optional<LabelPair>(const VertexLabel &, const VertexLabel &)>;

/// Errors: IncompleteRule, ForeignEdge.
auto orient(const Graph & g, const OrientationRule & rule) -> Orientation;
auto orient(std::shared_ptr<const Graph> g, const OrientationRule & rule) -> Orientation;
/// Orientation from an explicit arc list covering each edge exactly once.
auto orient(std::shared_ptr<const Graph> g, const std::vector<LabelPair> & arcs) -> Orientation;
/// The default tie rule: smaller label towards larger label.
auto orient_increasing(std::shared_ptr<const Graph> g) -> Orientation;
auto underlying(const Orientation & o) -> const Graph &;

/// Total vertex colouring, stored in the vertex order of the graph it colours.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {}

    /// Errors: PartialColoring when a vertex of g is missing, UnknownEndpoint
    /// when the map names a label outside g.
    static auto from_labels(const Graph & g, const std::map<VertexLabel, int> & colors) -> Coloring;

    auto size() const noexcept -> int { return static_cast<int>(colors_.size()); }
    auto operator[](int v) const -> int { return colors_[v]; }
    auto colors() const noexcept -> const std::vector<int> & { return colors_; }
    auto num_colors() const -> int;
    /// Renumbers colours 0,1,... in order of first appearance.
    auto canonical() const -> Coloring;

    auto operator==(const Coloring &) const -> bool = default;

private:
    std::vector<int> colors_;
};

} // namespace altcycles
