#include "altcycles/families.hpp"

#include <bit>
#include <charconv>
#include <map>

#include "altcycles/error.hpp"

namespace altcycles {

namespace {
    auto bad(const std::string & what) -> Error { return Error(ErrorKind::BadParameters, what); }

    auto int_labels(int n) -> std::vector<VertexLabel>
    {
        std::vector<VertexLabel> labels;
        labels.reserve(n);
        for (int i = 0; i < n; ++i)
            labels.push_back(VertexLabel::integer(i));
        return labels;
    }

    auto to_elements(unsigned mask) -> std::vector<int>
    {
        std::vector<int> xs;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1u)
                xs.push_back(i + 1);
        return xs;
    }

    /// k-subsets of [n] as bitmasks, in lexicographic order of their element lists.
    auto subsets(int n, int k) -> std::vector<unsigned>
    {
        std::vector<unsigned> out;
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            unsigned mask = 0;
            for (int i : pick)
                mask |= 1u << i;
            out.push_back(mask);
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return out;
    }

    auto is_stable(unsigned mask, int n) -> bool
    {
        unsigned full = n >= 32 ? ~0u : (1u << n) - 1;
        unsigned rotated = ((mask << 1) | (mask >> (n - 1))) & full;
        return (mask & rotated) == 0;
    }

    auto disjointness_graph(const std::vector<unsigned> & masks) -> Graph
    {
        std::vector<VertexLabel> labels;
        labels.reserve(masks.size());
        for (unsigned m : masks)
            labels.push_back(VertexLabel::set(to_elements(m)));
        std::vector<std::pair<int, int>> edges;
        for (std::size_t a = 0; a < masks.size(); ++a)
            for (std::size_t b = a + 1; b < masks.size(); ++b)
                if ((masks[a] & masks[b]) == 0)
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        return Graph::from_indices(std::move(labels), std::move(edges));
    }

    void check_kneser_params(int n, int k)
    {
        if (k < 1 || n < 2 * k)
            throw bad("need n >= 2k >= 2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
        if (n > 30)
            throw bad("ground set larger than 30 is out of range");
    }
}

auto complete(int n) -> Graph
{
    if (n < 1)
        throw bad("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_indices(int_labels(n), std::move(edges));
}

auto cycle(int n) -> Graph
{
    if (n < 3)
        throw bad("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_indices(int_labels(n), std::move(edges));
}

auto wheel(int n) -> Graph
{
    if (n < 3)
        throw bad("wheel needs a rim of length >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
    }
    return Graph::from_indices(int_labels(n + 1), std::move(edges));
}

auto moebius(int n) -> Graph
{
    if (n < 4 || n % 2 != 0)
        throw bad("Moebius ladder needs an even n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n / 2; ++i)
        edges.emplace_back(i, i + n / 2);
    return Graph::from_indices(int_labels(n), std::move(edges));
}

auto kneser(int n, int k) -> Graph
{
    check_kneser_params(n, k);
    return disjointness_graph(subsets(n, k));
}

auto schrijver(int n, int k) -> Graph
{
    check_kneser_params(n, k);
    std::vector<unsigned> stable;
    for (unsigned m : subsets(n, k))
        if (is_stable(m, n))
            stable.push_back(m);
    return disjointness_graph(stable);
}

auto generalized_mycielskian(const Graph & g, int r) -> Graph
{
    if (r < 1)
        throw bad("Mycielskian needs r >= 1");
    std::vector<VertexLabel> vertices;
    for (const auto & l : g.labels())
        for (int i = 0; i < r; ++i)
            vertices.push_back(VertexLabel::level(l, i));
    vertices.push_back(VertexLabel::apex());

    // vertex order is (base order, level) followed by the apex
    auto id = [r](int v, int i) { return v * r + i; };
    const int apex = g.order() * r;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(id(u, 0), id(v, 0));
        for (int i = 0; i + 1 < r; ++i) {
            edges.emplace_back(id(u, i), id(v, i + 1));
            edges.emplace_back(id(v, i), id(u, i + 1));
        }
    }
    for (int v = 0; v < g.order(); ++v)
        edges.emplace_back(id(v, r - 1), apex);
    return Graph::from_indices(std::move(vertices), std::move(edges));
}

auto iterated_mycielski(const std::vector<int> & levels) -> Graph
{
    if (levels.empty())
        throw bad("iterated Mycielskian needs at least one level");
    Graph g = complete(2);
    for (int r : levels)
        g = generalized_mycielskian(g, r);
    return g;
}

auto rational_complete(int p, int q) -> Graph
{
    if (q < 1 || p < 2 * q)
        throw bad("rational complete graph needs p >= 2q >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (b - a >= q && b - a <= p - q)
                edges.emplace_back(a, b);
    return Graph::from_indices(int_labels(p), std::move(edges));
}

namespace {
    auto pair_labels(int m) -> std::vector<VertexLabel>
    {
        std::vector<VertexLabel> labels;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                if (i != j)
                    labels.push_back(VertexLabel::pair(i, j));
        return labels;
    }

    /// Index of (i,j) in pair_labels(m).
    auto pair_index(int m, int i, int j) -> int { return (i - 1) * (m - 1) + (j < i ? j - 1 : j - 2); }
}

auto shift_graph(int m) -> Graph
{
    if (m < 2)
        throw bad("shift graph needs m >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                if (i != j && j != k)
                    edges.emplace_back(pair_index(m, i, j), pair_index(m, j, k));
    return Graph::from_indices(pair_labels(m), std::move(edges));
}

auto directed_shift_graph(int m) -> Digraph
{
    if (m < 2)
        throw bad("shift graph needs m >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                if (i != j && j != k)
                    arcs.emplace_back(pair_index(m, i, j), pair_index(m, j, k));
    return Digraph::from_indices(pair_labels(m), std::move(arcs));
}

auto clebsch() -> Graph
{
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) {
            int w = std::popcount(static_cast<unsigned>(x ^ y));
            if (w == 1 || w == 4)
                edges.emplace_back(x, y);
        }
    return Graph::from_indices(int_labels(16), std::move(edges));
}

auto grotzsch() -> Graph { return relabel_to_integers(iterated_mycielski({2, 2})); }

auto relabel_to_integers(const Graph & g) -> Graph { return Graph::from_indices(int_labels(g.order()), g.edges()); }

namespace {
    const std::map<std::string, FamilyKind> & family_names()
    {
        static const std::map<std::string, FamilyKind> names{
            {"kneser", FamilyKind::Kneser},
            {"schrijver", FamilyKind::Schrijver},
            {"myc", FamilyKind::Mycielski},
            {"rat", FamilyKind::Rational},
            {"shift", FamilyKind::Shift},
            {"dshift", FamilyKind::DirectedShift},
            {"clebsch", FamilyKind::Clebsch},
            {"grotzsch", FamilyKind::Grotzsch},
            {"wheel", FamilyKind::Wheel},
            {"cycle", FamilyKind::Cycle},
            {"complete", FamilyKind::Complete},
            {"moebius", FamilyKind::Moebius},
        };
        return names;
    }

    auto arity(FamilyKind kind) -> int
    {
        switch (kind) {
        case FamilyKind::Kneser:
        case FamilyKind::Schrijver:
        case FamilyKind::Rational: return 2;
        case FamilyKind::Clebsch:
        case FamilyKind::Grotzsch: return 0;
        case FamilyKind::Mycielski: return -1;
        default: return 1;
        }
    }

    auto parse_ints(const std::string & text, char sep) -> std::vector<int>
    {
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find(sep, pos);
            if (end == std::string::npos)
                end = text.size();
            int value = 0;
            auto first = text.data() + pos;
            auto last = text.data() + end;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last || first == last)
                throw Error(ErrorKind::ParseError, "bad integer list '" + text + "'");
            out.push_back(value);
            pos = end + 1;
        }
        return out;
    }
}

auto parse_family_spec(const std::string & text) -> FamilySpec
{
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    auto it = family_names().find(name);
    if (it == family_names().end())
        throw Error(ErrorKind::ParseError, "unknown family '" + name + "'");
    FamilySpec spec{it->second, {}};
    if (colon != std::string::npos)
        spec.params = parse_ints(text.substr(colon + 1), spec.kind == FamilyKind::Mycielski ? '-' : ',');
    int want = arity(spec.kind);
    if (want >= 0 && static_cast<int>(spec.params.size()) != want)
        throw Error(ErrorKind::ParseError, "'" + name + "' takes " + std::to_string(want) + " parameter(s)");
    if (want < 0 && spec.params.empty())
        throw Error(ErrorKind::ParseError, "'myc' needs at least one level");
    return spec;
}

auto to_string(const FamilySpec & spec) -> std::string
{
    std::string name;
    for (const auto & [n, k] : family_names())
        if (k == spec.kind)
            name = n;
    char sep = spec.kind == FamilyKind::Mycielski ? '-' : ',';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        name += i == 0 ? ':' : sep;
        name += std::to_string(spec.params[i]);
    }
    return name;
}

auto build_graph(const FamilySpec & spec) -> Graph
{
    const auto & p = spec.params;
    switch (spec.kind) {
    case FamilyKind::Kneser: return kneser(p[0], p[1]);
    case FamilyKind::Schrijver: return schrijver(p[0], p[1]);
    case FamilyKind::Mycielski: return iterated_mycielski(p);
    case FamilyKind::Rational: return rational_complete(p[0], p[1]);
    case FamilyKind::Shift: return shift_graph(p[0]);
    case FamilyKind::DirectedShift: throw bad("dshift is directed; build it as a digraph");
    case FamilyKind::Clebsch: return clebsch();
    case FamilyKind::Grotzsch: return grotzsch();
    case FamilyKind::Wheel: return wheel(p[0]);
    case FamilyKind::Cycle: return cycle(p[0]);
    case FamilyKind::Complete: return complete(p[0]);
    case FamilyKind::Moebius: return moebius(p[0]);
    }
    throw bad("unhandled family");
}

auto build_digraph(const FamilySpec & spec) -> Digraph
{
    if (spec.kind != FamilyKind::DirectedShift)
        throw bad("only dshift builds a digraph");
    return directed_shift_graph(spec.params[0]);
}

} // namespace altcycles
