#include "altcycles/corpus.hpp"

#include <random>

#include "altcycles/error.hpp"

namespace altcycles {

namespace {
    /// Uniform in [lo, hi] by rejection; std distributions differ between
    /// standard libraries.
    auto uniform(std::mt19937_64 & rng, std::uint64_t lo, std::uint64_t hi) -> std::uint64_t
    {
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
        std::uint64_t x;
        do
            x = rng();
        while (x >= limit);
        return lo + x % span;
    }
}

auto random_digraph_corpus(int count, int max_vertices, std::uint64_t seed) -> std::vector<Orientation>
{
    if (count < 0 || max_vertices < 1 || max_vertices > 12)
        throw Error(ErrorKind::BadParameters, "corpus needs count >= 0 and 1 <= max_vertices <= 12");
    std::mt19937_64 rng(seed);
    std::vector<Orientation> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        int n = static_cast<int>(uniform(rng, std::min(2, max_vertices), max_vertices));
        std::vector<VertexLabel> labels;
        for (int v = 0; v < n; ++v)
            labels.push_back(VertexLabel::integer(v));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() >> 63)
                    edges.emplace_back(u, v);
        auto g = std::make_shared<const Graph>(Graph::from_indices(std::move(labels), std::move(edges)));
        std::vector<bool> forward(g->size());
        for (int e = 0; e < g->size(); ++e)
            forward[e] = rng() >> 63;
        corpus.emplace_back(std::move(g), std::move(forward));
    }
    return corpus;
}

} // namespace altcycles
