#include "altcycles/evaluate.hpp"

#include <algorithm>
#include <cstdint>

#include "altcycles/error.hpp"

namespace altcycles {

namespace {
    void require_total(int order, const Coloring & c)
    {
        if (c.size() != order)
            throw Error(ErrorKind::PartialColoring,
                "colouring covers " + std::to_string(c.size()) + " of " + std::to_string(order) + " vertices");
        for (int x : c.colors())
            if (x < 0)
                throw Error(ErrorKind::PartialColoring, "negative colour");
    }

    auto monochromatic_edge(const std::vector<std::pair<int, int>> & edges, const Coloring & c) -> bool
    {
        return std::any_of(edges.begin(), edges.end(), [&](auto e) { return c[e.first] == c[e.second]; });
    }

    auto count_distinct(std::vector<int> & scratch) -> int
    {
        std::sort(scratch.begin(), scratch.end());
        return static_cast<int>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
    }
}

auto is_proper(const Graph & g, const Coloring & c) -> bool
{
    require_total(g.order(), c);
    return ! monochromatic_edge(g.edges(), c);
}

auto local_value(const Graph & g, const Coloring & c) -> int
{
    if (! is_proper(g, c))
        throw Error(ErrorKind::ImproperColoring, "local value needs a proper colouring");
    int best = 0;
    std::vector<int> scratch;
    for (int v = 0; v < g.order(); ++v) {
        scratch.assign(1, c[v]);
        for (int w : g.neighbors(v))
            scratch.push_back(c[w]);
        best = std::max(best, count_distinct(scratch));
    }
    return best;
}

auto directed_local_value(const Orientation & o, const Coloring & c) -> int
{
    if (! is_proper(o.base(), c))
        throw Error(ErrorKind::ImproperColoring, "directed local value needs a proper colouring");
    int best = 0;
    std::vector<int> scratch;
    for (int v = 0; v < o.base().order(); ++v) {
        scratch.assign(1, c[v]);
        for (int w : o.base().neighbors(v))
            if (o.has_arc(v, w))
                scratch.push_back(c[w]);
        best = std::max(best, count_distinct(scratch));
    }
    return best;
}

auto directed_local_value(const Digraph & d, const Coloring & c) -> int
{
    require_total(d.order(), c);
    if (monochromatic_edge(d.arcs(), c))
        throw Error(ErrorKind::ImproperColoring, "directed local value needs a proper colouring");
    int best = 0;
    std::vector<int> scratch;
    for (int v = 0; v < d.order(); ++v) {
        scratch.assign(1, c[v]);
        for (int w : d.out_neighbors(v))
            scratch.push_back(c[w]);
        best = std::max(best, count_distinct(scratch));
    }
    return best;
}

auto is_s_wide(const Graph & g, const Coloring & c, int s) -> bool
{
    if (s < 1)
        throw Error(ErrorKind::BadParameters, "width parameter must be positive");
    require_total(g.order(), c);

    const int n = g.order();
    const int length = 2 * s - 1;
    std::vector<std::uint8_t> frontier(n), next(n);
    for (int start = 0; start < n; ++start) {
        std::fill(frontier.begin(), frontier.end(), 0);
        frontier[start] = 1;
        for (int step = 0; step < length; ++step) {
            std::fill(next.begin(), next.end(), 0);
            for (int v = 0; v < n; ++v)
                if (frontier[v])
                    for (int w : g.neighbors(v))
                        next[w] = 1;
            frontier.swap(next);
        }
        for (int v = 0; v < n; ++v)
            if (frontier[v] && c[v] == c[start])
                return false;
    }
    return true;
}

} // namespace altcycles
