#include "altcycles/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "altcycles/error.hpp"

namespace altcycles {

namespace {
    auto find_in(const std::vector<VertexLabel> & labels, const VertexLabel & label) -> std::optional<int>
    {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label)
            return std::nullopt;
        return static_cast<int>(it - labels.begin());
    }

    auto sorted_unique(std::vector<VertexLabel> vertices) -> std::vector<VertexLabel>
    {
        std::sort(vertices.begin(), vertices.end());
        auto dup = std::adjacent_find(vertices.begin(), vertices.end());
        if (dup != vertices.end())
            throw Error(ErrorKind::DuplicateVertex, "vertex " + dup->to_string() + " listed twice");
        return vertices;
    }

    auto resolve(const std::vector<VertexLabel> & labels, const LabelPair & p) -> std::pair<int, int>
    {
        auto u = find_in(labels, p.first);
        auto v = find_in(labels, p.second);
        if (! u)
            throw Error(ErrorKind::UnknownEndpoint, p.first.to_string() + " is not a vertex");
        if (! v)
            throw Error(ErrorKind::UnknownEndpoint, p.second.to_string() + " is not a vertex");
        if (*u == *v)
            throw Error(ErrorKind::SelfLoop, "loop at " + p.first.to_string());
        return {*u, *v};
    }
}

auto Graph::from_indices(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> edges) -> Graph
{
    if (std::adjacent_find(labels.begin(), labels.end(), std::greater_equal<>()) != labels.end())
        throw Error(ErrorKind::DuplicateVertex, "labels must be sorted and distinct");
    Graph g;
    g.labels_ = std::move(labels);
    const auto n = g.labels_.size();
    for (auto [u, v] : edges) {
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "loop at index " + std::to_string(u));
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw Error(ErrorKind::UnknownEndpoint, "edge index out of range");
    }
    for (auto & [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);

    g.adjacency_.assign(n, {});
    g.edge_ids_.assign(n * n, -1);
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
        auto [u, v] = g.edges_[e];
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        g.edge_ids_[g.index(u, v)] = static_cast<int>(e);
        g.edge_ids_[g.index(v, u)] = static_cast<int>(e);
    }
    for (auto & nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

auto Graph::find(const VertexLabel & label) const -> std::optional<int> { return find_in(labels_, label); }

auto Graph::index_of(const VertexLabel & label) const -> int
{
    if (auto v = find(label))
        return *v;
    throw Error(ErrorKind::UnknownEndpoint, label.to_string() + " is not a vertex");
}

auto make_graph(std::vector<VertexLabel> vertices, const std::vector<LabelPair> & edges) -> Graph
{
    auto labels = sorted_unique(std::move(vertices));
    std::vector<std::pair<int, int>> idx;
    idx.reserve(edges.size());
    for (const auto & e : edges)
        idx.push_back(resolve(labels, e));
    return Graph::from_indices(std::move(labels), std::move(idx));
}

auto Digraph::from_indices(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> arcs) -> Digraph
{
    Digraph d;
    d.labels_ = std::move(labels);
    const auto n = d.labels_.size();
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    d.arcs_ = std::move(arcs);
    d.out_.assign(n, {});
    d.in_.assign(n, {});
    d.arc_matrix_.assign(n * n, 0);
    for (auto [u, v] : d.arcs_) {
        d.out_[u].push_back(v);
        d.in_[v].push_back(u);
        d.arc_matrix_[u * n + v] = 1;
    }
    for (auto & xs : d.in_)
        std::sort(xs.begin(), xs.end());
    return d;
}

auto Digraph::find(const VertexLabel & label) const -> std::optional<int> { return find_in(labels_, label); }

auto Digraph::index_of(const VertexLabel & label) const -> int
{
    if (auto v = find(label))
        return *v;
    throw Error(ErrorKind::UnknownEndpoint, label.to_string() + " is not a vertex");
}

auto make_digraph(std::vector<VertexLabel> vertices, const std::vector<LabelPair> & arcs) -> Digraph
{
    auto labels = sorted_unique(std::move(vertices));
    std::vector<std::pair<int, int>> idx;
    idx.reserve(arcs.size());
    for (const auto & a : arcs)
        idx.push_back(resolve(labels, a));
    return Digraph::from_indices(std::move(labels), std::move(idx));
}

auto underlying(const Digraph & d) -> Graph { return Graph::from_indices(d.labels(), d.arcs()); }

Orientation::Orientation(std::shared_ptr<const Graph> base, std::vector<bool> forward) :
    base_(std::move(base)),
    forward_(std::move(forward))
{
    if (static_cast<int>(forward_.size()) != base_->size())
        throw Error(ErrorKind::IncompleteRule, "direction count does not match edge count");
}

auto Orientation::tail(int edge) const -> int
{
    const auto & [u, v] = base_->edges()[edge];
    return forward_[edge] ? u : v;
}

auto Orientation::head(int edge) const -> int
{
    const auto & [u, v] = base_->edges()[edge];
    return forward_[edge] ? v : u;
}

auto Orientation::has_arc(int u, int v) const -> bool
{
    int e = base_->edge_id(u, v);
    return e >= 0 && tail(e) == u;
}

auto Orientation::arcs() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    result.reserve(forward_.size());
    for (int e = 0; e < base_->size(); ++e)
        result.emplace_back(tail(e), head(e));
    return result;
}

auto Orientation::out_neighbors(int v) const -> std::vector<int>
{
    std::vector<int> result;
    for (int w : base_->neighbors(v))
        if (has_arc(v, w))
            result.push_back(w);
    return result;
}

auto Orientation::in_neighbors(int v) const -> std::vector<int>
{
    std::vector<int> result;
    for (int w : base_->neighbors(v))
        if (has_arc(w, v))
            result.push_back(w);
    return result;
}

auto Orientation::out_degree(int v) const -> int
{
    int d = 0;
    for (int w : base_->neighbors(v))
        d += has_arc(v, w);
    return d;
}

auto Orientation::in_degree(int v) const -> int { return base_->degree(v) - out_degree(v); }

auto Orientation::reversed() const -> Orientation
{
    std::vector<bool> flipped(forward_.size());
    for (std::size_t e = 0; e < forward_.size(); ++e)
        flipped[e] = ! forward_[e];
    return Orientation(base_, std::move(flipped));
}

auto Orientation::to_digraph() const -> Digraph { return Digraph::from_indices(base_->labels(), arcs()); }

auto orient(std::shared_ptr<const Graph> g, const OrientationRule & rule) -> Orientation
{
    std::vector<bool> forward(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        const auto & lu = g->label(u);
        const auto & lv = g->label(v);
        auto choice = rule(lu, lv);
        if (! choice)
            throw Error(ErrorKind::IncompleteRule, "no direction for edge " + lu.to_string() + "-" + lv.to_string());
        if (choice->first == lu && choice->second == lv)
            forward[e] = true;
        else if (choice->first == lv && choice->second == lu)
            forward[e] = false;
        else
            throw Error(ErrorKind::ForeignEdge,
                "rule answered " + choice->first.to_string() + "->" + choice->second.to_string() + " for edge "
                    + lu.to_string() + "-" + lv.to_string());
    }
    return Orientation(std::move(g), std::move(forward));
}

auto orient(const Graph & g, const OrientationRule & rule) -> Orientation
{
    return orient(std::make_shared<const Graph>(g), rule);
}

auto orient(std::shared_ptr<const Graph> g, const std::vector<LabelPair> & arcs) -> Orientation
{
    std::vector<int> state(g->size(), -1);
    for (const auto & [a, b] : arcs) {
        auto u = g->find(a);
        auto v = g->find(b);
        int e = (u && v && *u != *v) ? g->edge_id(*u, *v) : -1;
        if (e < 0)
            throw Error(ErrorKind::ForeignEdge, a.to_string() + "->" + b.to_string() + " is not an edge");
        int dir = *u < *v ? 1 : 0;
        if (state[e] >= 0 && state[e] != dir)
            throw Error(ErrorKind::ForeignEdge, "both directions given for " + a.to_string() + "-" + b.to_string());
        state[e] = dir;
    }
    std::vector<bool> forward(g->size());
    for (int e = 0; e < g->size(); ++e) {
        if (state[e] < 0) {
            auto [u, v] = g->edges()[e];
            throw Error(ErrorKind::IncompleteRule,
                "no arc for edge " + g->label(u).to_string() + "-" + g->label(v).to_string());
        }
        forward[e] = state[e] == 1;
    }
    return Orientation(std::move(g), std::move(forward));
}

auto orient_increasing(std::shared_ptr<const Graph> g) -> Orientation
{
    std::vector<bool> forward(g->size(), true);
    return Orientation(std::move(g), std::move(forward));
}

auto underlying(const Orientation & o) -> const Graph & { return o.base(); }

auto Coloring::from_labels(const Graph & g, const std::map<VertexLabel, int> & colors) -> Coloring
{
    std::vector<int> result(g.order(), -1);
    for (const auto & [label, color] : colors) {
        auto v = g.find(label);
        if (! v)
            throw Error(ErrorKind::UnknownEndpoint, "coloured label " + label.to_string() + " is not a vertex");
        if (color < 0)
            throw Error(ErrorKind::PartialColoring, "negative colour at " + label.to_string());
        result[*v] = color;
    }
    for (int v = 0; v < g.order(); ++v)
        if (result[v] < 0)
            throw Error(ErrorKind::PartialColoring, "no colour for " + g.label(v).to_string());
    return Coloring(std::move(result));
}

auto Coloring::num_colors() const -> int
{
    std::set<int> seen(colors_.begin(), colors_.end());
    return static_cast<int>(seen.size());
}

auto Coloring::canonical() const -> Coloring
{
    std::map<int, int> renumber;
    std::vector<int> result;
    result.reserve(colors_.size());
    for (int c : colors_) {
        auto [it, inserted] = renumber.emplace(c, static_cast<int>(renumber.size()));
        result.push_back(it->second);
    }
    return Coloring(std::move(result));
}

} // namespace altcycles
