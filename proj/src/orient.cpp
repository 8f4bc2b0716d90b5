#include "altcycles/orient.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "altcycles/coloring_search.hpp"
#include "altcycles/evaluate.hpp"
#include "altcycles/families.hpp"

namespace altcycles {

namespace {
    class TieChooser {
    public:
        explicit TieChooser(const TieRule & rule)
        {
            if (rule.seed)
                rng_.emplace(*rule.seed);
        }

        /// true: smaller label -> larger label
        auto forward() -> bool { return rng_ ? ((*rng_)() & 1) == 0 : true; }

    private:
        std::optional<std::mt19937_64> rng_;
    };

    void add_check(ConstructionReport & report, const char * name, std::optional<int> parameter, NodeBudget & budget)
    {
        report.checks.push_back(run_check(report, name, parameter, budget));
    }

    /// Adds the check unless it runs out of budget, in which case it is left off.
    void try_add_check(ConstructionReport & report, const char * name, NodeBudget * budget)
    {
        NodeBudget fallback;
        try {
            add_check(report, name, std::nullopt, budget ? *budget : fallback);
        }
        catch (const BudgetExceeded &) {
        }
    }

    void add_coloring_checks(ConstructionReport & report, NodeBudget & budget)
    {
        add_check(report, check_names::proper_coloring, std::nullopt, budget);
        add_check(report, check_names::directed_local_value_2, std::nullopt, budget);
        add_check(report, check_names::color_count, std::nullopt, budget);
    }

    auto contains(const VertexLabel & label, int j) -> bool
    {
        const auto & xs = label.elements();
        return std::binary_search(xs.begin(), xs.end(), j);
    }
}

auto three_color_orientation(std::shared_ptr<const Graph> g, const Coloring & c) -> ConstructionReport
{
    if (g->size() == 0)
        throw Error(ErrorKind::BadParameters, "graph has no edges");
    if (! is_proper(*g, c))
        throw Error(ErrorKind::ImproperColoring, "colouring is not proper");
    if (c.num_colors() > 3)
        throw Error(ErrorKind::TooManyColors, "colouring uses " + std::to_string(c.num_colors()) + " colours");
    Coloring colors = *std::max_element(c.colors().begin(), c.colors().end()) > 2 ? c.canonical() : c;

    std::vector<bool> forward(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        forward[e] = colors[v] == (colors[u] + 1) % 3;
    }
    ConstructionReport report{"", Orientation(std::move(g), std::move(forward)), colors, {}};
    NodeBudget budget;
    add_coloring_checks(report, budget);
    return report;
}

auto pullback_orientation(std::shared_ptr<const Graph> g, const Digraph & target, const HomomorphismMap & hom)
    -> ConstructionReport
{
    if (hom.size() != g->order())
        throw Error(ErrorKind::PartialMap, "map does not cover the graph");
    std::vector<bool> forward(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        int hu = hom[u], hv = hom[v];
        if (hu < 0 || hv < 0 || hu >= target.order() || hv >= target.order())
            throw Error(ErrorKind::PartialMap, "image outside the target");
        bool fwd = target.has_arc(hu, hv), bwd = target.has_arc(hv, hu);
        if (! fwd && ! bwd)
            throw Error(ErrorKind::NotAHomomorphism,
                "edge " + g->label(u).to_string() + "-" + g->label(v).to_string() + " has no image arc");
        forward[e] = fwd;
    }
    std::optional<Coloring> coloring;
    bool pair_target = std::all_of(target.labels().begin(), target.labels().end(),
        [](const VertexLabel & l) { return l.kind() == VertexLabel::Kind::Pair; });
    if (pair_target && target.order() > 0) {
        std::vector<int> colors(g->order());
        for (int v = 0; v < g->order(); ++v)
            colors[v] = target.label(hom[v]).as_pair().first - 1;
        coloring = Coloring(std::move(colors));
    }
    ConstructionReport report{"", Orientation(std::move(g), std::move(forward)), coloring, {}};
    if (coloring) {
        NodeBudget budget;
        add_coloring_checks(report, budget);
    }
    return report;
}

auto source_orientation_kneser(int m, int k, int j, const TieRule & tie, NodeBudget * budget) -> ConstructionReport
{
    if (m < 1 || k < 1)
        throw Error(ErrorKind::BadParameters, "need m >= 1 and k >= 1");
    const int n = m * (2 * k + 1);
    if (j < 1 || j > n)
        throw Error(ErrorKind::BadParameters, "element j must lie in [1, " + std::to_string(n) + "]");
    auto g = std::make_shared<const Graph>(kneser(n, m * k));
    TieChooser chooser(tie);
    std::vector<bool> forward(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        if (contains(g->label(u), j))
            forward[e] = true;
        else if (contains(g->label(v), j))
            forward[e] = false;
        else
            forward[e] = chooser.forward();
    }
    ConstructionReport report{
        "kneser:" + std::to_string(n) + "," + std::to_string(m * k), Orientation(g, std::move(forward)), {}, {}};
    NodeBudget fallback;
    add_check(report, check_names::sources_contain, j, budget ? *budget : fallback);
    try_add_check(report, check_names::shortest_alternating, budget);
    return report;
}

void validate_partition(const Graph & g, const Partition & p)
{
    auto bad = [](const std::string & what) { return Error(ErrorKind::InvalidPartition, what); };
    const int n = g.order();
    std::vector<int> side(n, -1);
    for (int s = 0; s < 2; ++s)
        for (int v : s == 0 ? p.side_a : p.side_b) {
            if (v < 0 || v >= n)
                throw bad("side vertex out of range");
            if (side[v] >= 0)
                throw bad(g.label(v).to_string() + " is listed twice");
            side[v] = s;
        }
    for (int v = 0; v < n; ++v)
        if (side[v] < 0)
            throw bad(g.label(v).to_string() + " is on neither side");

    std::vector<bool> matched(n, false);
    std::set<std::pair<int, int>> matching;
    for (auto [u, v] : p.matching) {
        if (u < 0 || v < 0 || u >= n || v >= n || ! g.adjacent(u, v))
            throw bad("matching pair is not an edge");
        if (side[u] != side[v])
            throw bad("matching edge crosses the sides");
        if (matched[u] || matched[v])
            throw bad("matching edges share a vertex");
        matched[u] = matched[v] = true;
        matching.emplace(std::min(u, v), std::max(u, v));
    }
    for (auto [u, v] : g.edges())
        if (side[u] == side[v] && ! matching.contains({u, v}))
            throw bad("edge " + g.label(u).to_string() + "-" + g.label(v).to_string() + " lies inside a side");
}

namespace {
    /// Side labelling search. Every vertex may have at most one neighbour on
    /// its own side, and every shortest odd cycle at most one same-side edge
    /// (parity then forces exactly one).
    class PartitionSearch {
    public:
        PartitionSearch(const Graph & g, std::vector<Cycle> cycles, NodeBudget & budget) :
            g_(g),
            n_(g.order()),
            cycles_(std::move(cycles)),
            budget_(budget),
            side_(n_, -1),
            same_(n_, 0),
            mono_(cycles_.size(), 0),
            edge_cycles_(g.size()),
            vertex_cycles_(n_)
        {
            for (std::size_t c = 0; c < cycles_.size(); ++c) {
                const auto & vs = cycles_[c].vertices;
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    edge_cycles_[g_.edge_id(vs[i], vs[(i + 1) % vs.size()])].push_back(static_cast<int>(c));
                    vertex_cycles_[vs[i]].push_back(static_cast<int>(c));
                }
            }
        }

        auto run() -> std::optional<Partition>
        {
            if (! dfs())
                return std::nullopt;
            Partition p;
            for (int v = 0; v < n_; ++v)
                (side_[v] == 0 ? p.side_a : p.side_b).push_back(v);
            for (auto [u, v] : g_.edges())
                if (side_[u] == side_[v])
                    p.matching.emplace_back(u, v);
            validate_partition(g_, p);
            return p;
        }

    private:
        /// Records the assignment even when it breaks a limit, so undo stays symmetric.
        auto assign(int v, int s) -> bool
        {
            side_[v] = s;
            trail_.push_back(v);
            bool ok = true;
            for (int w : g_.neighbors(v)) {
                if (side_[w] != s)
                    continue;
                ok &= ++same_[v] <= 1;
                ok &= ++same_[w] <= 1;
                for (int c : edge_cycles_[g_.edge_id(v, w)])
                    ok &= ++mono_[c] <= 1;
            }
            return ok;
        }

        void unassign(int v)
        {
            int s = side_[v];
            for (int w : g_.neighbors(v)) {
                if (side_[w] != s)
                    continue;
                --same_[v];
                --same_[w];
                for (int c : edge_cycles_[g_.edge_id(v, w)])
                    --mono_[c];
            }
            side_[v] = -1;
        }

        void undo(std::size_t mark)
        {
            while (trail_.size() > mark) {
                unassign(trail_.back());
                trail_.pop_back();
            }
        }

        void force_opposite_neighbors(int x, std::deque<std::pair<int, int>> & queue)
        {
            for (int w : g_.neighbors(x))
                if (side_[w] < 0)
                    queue.emplace_back(w, 1 - side_[x]);
        }

        /// Assigns v and everything it forces. false on conflict.
        auto assign_and_propagate(int v, int s) -> bool
        {
            std::deque<std::pair<int, int>> queue{{v, s}};
            while (! queue.empty()) {
                auto [x, t] = queue.front();
                queue.pop_front();
                if (side_[x] >= 0) {
                    if (side_[x] != t)
                        return false;
                    continue;
                }
                if (! assign(x, t))
                    return false;
                if (same_[x] == 1) {
                    force_opposite_neighbors(x, queue);
                    for (int w : g_.neighbors(x))
                        if (side_[w] == t)
                            force_opposite_neighbors(w, queue);
                }
                for (int c : vertex_cycles_[x]) {
                    if (mono_[c] != 1)
                        continue;
                    const auto & vs = cycles_[c].vertices;
                    const std::size_t len = vs.size();
                    for (std::size_t i = 0; i < len; ++i) {
                        int a = vs[i];
                        if (side_[a] < 0)
                            continue;
                        for (int b : {vs[(i + 1) % len], vs[(i + len - 1) % len]})
                            if (side_[b] < 0)
                                queue.emplace_back(b, 1 - side_[a]);
                    }
                }
            }
            return true;
        }

        auto choose(int & preferred) const -> int
        {
            int best = -1, best_score = -1;
            for (int v = 0; v < n_; ++v) {
                if (side_[v] >= 0)
                    continue;
                int score = 0, first_side = -1;
                for (int w : g_.neighbors(v))
                    if (side_[w] >= 0) {
                        ++score;
                        if (first_side < 0)
                            first_side = side_[w];
                    }
                if (score > best_score) {
                    best = v;
                    best_score = score;
                    preferred = first_side < 0 ? 0 : 1 - first_side;
                }
            }
            if (best >= 0 && best_score == 0)
                preferred = -1;
            return best;
        }

        auto dfs() -> bool
        {
            budget_.tick();
            int preferred = 0;
            int v = choose(preferred);
            if (v < 0)
                return true;
            std::size_t mark = trail_.size();
            // a vertex with no labelled neighbour starts a fresh component, whose
            // two side-swapped labellings are equivalent
            std::vector<int> options = preferred < 0 ? std::vector<int>{0} : std::vector<int>{preferred, 1 - preferred};
            for (int s : options) {
                if (assign_and_propagate(v, s) && dfs())
                    return true;
                undo(mark);
            }
            return false;
        }

        const Graph & g_;
        int n_;
        std::vector<Cycle> cycles_;
        NodeBudget & budget_;
        std::vector<int> side_;
        std::vector<int> same_;
        std::vector<int> mono_;
        std::vector<std::vector<int>> edge_cycles_;
        std::vector<std::vector<int>> vertex_cycles_;
        std::vector<int> trail_;
    };
}

auto find_bipartite_matching_partition(const Graph & g, NodeBudget & budget) -> std::optional<Partition>
{
    std::vector<Cycle> cycles;
    if (! is_bipartite(g))
        cycles = enumerate_shortest_odd_cycles(g, budget);
    return PartitionSearch(g, std::move(cycles), budget).run();
}

auto partition_orientation(std::shared_ptr<const Graph> g, const Partition & p, const TieRule & tie,
    NodeBudget * budget) -> ConstructionReport
{
    validate_partition(*g, p);
    std::vector<int> side(g->order());
    for (int v : p.side_b)
        side[v] = 1;
    TieChooser chooser(tie);
    std::vector<bool> forward(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        if (side[u] != side[v])
            forward[e] = side[u] == 0;
        else
            forward[e] = chooser.forward();
    }
    ConstructionReport report{"", Orientation(g, std::move(forward)), {}, {}};
    if (! is_bipartite(*g))
        try_add_check(report, check_names::shortest_alternating, budget);
    return report;
}

namespace {
    struct SchrijverBlocks {
        std::vector<int> a, b, rest;
        std::vector<int> outside;  // unique neighbour outside A and B, per vertex of A and B
        bool ok = false;
    };

    auto subsets_of(const std::vector<int> & ground, int k) -> std::vector<VertexLabel>
    {
        std::vector<VertexLabel> result;
        const int size = static_cast<int>(ground.size());
        std::vector<bool> pick(size, false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::vector<int> xs;
            for (int i = 0; i < size; ++i)
                if (pick[i])
                    xs.push_back(ground[i]);
            result.push_back(VertexLabel::set(std::move(xs)));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return result;
    }

    auto schrijver_blocks(const Graph & g, int k) -> SchrijverBlocks
    {
        SchrijverBlocks blocks;
        blocks.outside.assign(g.order(), -1);
        if (k < 2)
            return blocks;
        std::vector<int> odd, even;
        for (int i = 1; i <= 2 * k + 2; ++i)
            (i % 2 ? odd : even).push_back(i);
        std::vector<int> role(g.order(), 2);
        for (int which = 0; which < 2; ++which)
            for (const auto & label : subsets_of(which == 0 ? odd : even, k)) {
                auto v = g.find(label);
                if (! v)
                    return blocks;
                role[*v] = which;
                (which == 0 ? blocks.a : blocks.b).push_back(*v);
            }
        std::sort(blocks.a.begin(), blocks.a.end());
        std::sort(blocks.b.begin(), blocks.b.end());
        for (int v = 0; v < g.order(); ++v)
            if (role[v] == 2)
                blocks.rest.push_back(v);

        for (int which = 0; which < 2; ++which) {
            const auto & mine = which == 0 ? blocks.a : blocks.b;
            std::set<int> seen;
            for (int v : mine) {
                int same = 0, other = 0;
                for (int w : g.neighbors(v)) {
                    if (role[w] == which)
                        ++same;
                    else if (role[w] == 1 - which)
                        ++other;
                    else if (blocks.outside[v] < 0)
                        blocks.outside[v] = w;
                    else
                        return blocks;
                }
                if (same != 0 || other != k + 1 || blocks.outside[v] < 0 || ! seen.insert(blocks.outside[v]).second)
                    return blocks;
            }
        }
        blocks.ok = true;
        return blocks;
    }
}

auto schrijver_structure_holds(const Graph & g, int k) -> bool { return schrijver_blocks(g, k).ok; }

auto schrijver4_construction(int k, NodeBudget & budget) -> ConstructionReport
{
    if (k < 2)
        throw Error(ErrorKind::BadParameters, "construction needs k >= 2");
    const int n = 2 * k + 2;
    auto g = std::make_shared<const Graph>(schrijver(n, k));
    auto blocks = schrijver_blocks(*g, k);
    if (! blocks.ok)
        throw Error(ErrorKind::StructureMismatch, "odd and even blocks do not have the expected incidences");

    std::vector<int> rest_index(g->order(), -1);
    std::vector<VertexLabel> rest_labels;
    for (int v : blocks.rest) {
        rest_index[v] = static_cast<int>(rest_labels.size());
        rest_labels.push_back(g->label(v));
    }
    std::vector<std::pair<int, int>> rest_edges;
    for (auto [u, v] : g->edges())
        if (rest_index[u] >= 0 && rest_index[v] >= 0)
            rest_edges.emplace_back(rest_index[u], rest_index[v]);
    auto rest_coloring = find_k_coloring(Graph::from_indices(rest_labels, rest_edges), 3, budget);
    if (! rest_coloring)
        throw Error(ErrorKind::StructureMismatch, "remaining vertices are not 3-colourable");

    enum Role { InA, InB, InRest };
    std::vector<Role> role(g->order(), InRest);
    for (int v : blocks.a)
        role[v] = InA;
    for (int v : blocks.b)
        role[v] = InB;
    auto rest_color = [&](int v) { return (*rest_coloring)[rest_index[v]]; };

    std::vector<int> colors(g->order());
    for (int v = 0; v < g->order(); ++v) {
        switch (role[v]) {
        case InRest: colors[v] = rest_color(v); break;
        case InB: colors[v] = 3; break;
        case InA: colors[v] = (rest_color(blocks.outside[v]) + 1) % 3; break;
        }
    }

    // tail role -> head role: A -> B, B -> rest, rest -> A; inside the rest
    // colour i points to colour i+1 mod 3
    auto points = [&](int u, int v) {
        Role ru = role[u], rv = role[v];
        if (ru == InRest && rv == InRest)
            return rest_color(v) == (rest_color(u) + 1) % 3;
        return (ru == InA && rv == InB) || (ru == InB && rv == InRest) || (ru == InRest && rv == InA);
    };
    std::vector<bool> forward(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        forward[e] = points(u, v);
    }

    ConstructionReport report{"schrijver:" + std::to_string(n) + "," + std::to_string(k),
        Orientation(g, std::move(forward)), Coloring(std::move(colors)), {}};
    add_check(report, check_names::proper_coloring, std::nullopt, budget);
    add_check(report, check_names::directed_local_value_2, std::nullopt, budget);
    add_check(report, check_names::color_count, 4, budget);
    add_check(report, check_names::schrijver_structure, k, budget);
    return report;
}

auto mycielski_level_map(const Graph & g, int r_from, int r_to) -> HomomorphismMap
{
    if (r_to < 1 || r_from <= r_to)
        throw Error(ErrorKind::BadParameters, "level map needs r_from > r_to >= 1");
    Graph src = generalized_mycielskian(g, r_from);
    Graph dst = generalized_mycielskian(g, r_to);
    const int shift = r_from - r_to;
    HomomorphismMap map;
    for (const auto & label : src.labels()) {
        if (label.kind() == VertexLabel::Kind::Apex)
            map.image.push_back(dst.index_of(label));
        else
            map.image.push_back(
                dst.index_of(VertexLabel::level(label.base(), std::max(label.level_index() - shift, 0))));
    }
    if (! verify_homomorphism(src, dst, map))
        throw Error(ErrorKind::NotAHomomorphism, "level collapse does not preserve edges");
    return map;
}

auto mycielski_functor_map(const Graph & g, const Graph & h, const HomomorphismMap & f, int r) -> HomomorphismMap
{
    if (! verify_homomorphism(g, h, f))
        throw Error(ErrorKind::NotAHomomorphism, "base map is not a homomorphism");
    Graph src = generalized_mycielskian(g, r);
    Graph dst = generalized_mycielskian(h, r);
    HomomorphismMap map;
    for (const auto & label : src.labels()) {
        if (label.kind() == VertexLabel::Kind::Apex)
            map.image.push_back(dst.index_of(label));
        else
            map.image.push_back(
                dst.index_of(VertexLabel::level(h.label(f[g.index_of(label.base())]), label.level_index())));
    }
    if (! verify_homomorphism(src, dst, map))
        throw Error(ErrorKind::NotAHomomorphism, "levelwise lift does not preserve edges");
    return map;
}

namespace {
    /// Backtracking over the edges of the shortest odd cycles; each cycle must
    /// end up with exactly one mixed vertex.
    class ShortestAlternatingSearch {
    public:
        ShortestAlternatingSearch(const Graph & g, std::vector<Cycle> cycles, NodeBudget & budget) :
            g_(g),
            cycles_(std::move(cycles)),
            budget_(budget),
            dir_(g.size(), -1),
            incidences_(g.size()),
            decided_(cycles_.size(), 0),
            mixed_(cycles_.size(), 0)
        {
            std::vector<bool> listed(g.size(), false);
            for (std::size_t c = 0; c < cycles_.size(); ++c) {
                const auto & vs = cycles_[c].vertices;
                const std::size_t len = vs.size();
                for (std::size_t i = 0; i < len; ++i) {
                    int prev = vs[(i + len - 1) % len], x = vs[i], next = vs[(i + 1) % len];
                    Incidence inc{static_cast<int>(c), x, g.edge_id(prev, x), g.edge_id(x, next)};
                    incidences_[inc.e1].push_back(inc);
                    incidences_[inc.e2].push_back(inc);
                    int e = g.edge_id(x, next);
                    if (! listed[e]) {
                        listed[e] = true;
                        order_.push_back(e);
                    }
                }
            }
        }

        auto run() -> std::optional<std::vector<bool>>
        {
            if (! dfs(0))
                return std::nullopt;
            std::vector<bool> forward(g_.size(), true);
            for (int e = 0; e < g_.size(); ++e)
                if (dir_[e] >= 0)
                    forward[e] = dir_[e] == 1;
            return forward;
        }

    private:
        struct Incidence {
            int cycle, vertex, e1, e2;
        };

        auto leaves(int e, int x) const -> bool
        {
            return (dir_[e] == 1) == (g_.edges()[e].first == x);
        }

        auto is_mixed(const Incidence & inc) const -> bool { return leaves(inc.e1, inc.vertex) != leaves(inc.e2, inc.vertex); }

        auto other(const Incidence & inc, int e) const -> int { return inc.e1 == e ? inc.e2 : inc.e1; }

        auto set(int e, int d) -> bool
        {
            dir_[e] = d;
            bool ok = true;
            for (const auto & inc : incidences_[e]) {
                if (dir_[other(inc, e)] < 0)
                    continue;
                int c = inc.cycle;
                ++decided_[c];
                mixed_[c] += is_mixed(inc);
                ok &= mixed_[c] <= 1;
                ok &= decided_[c] < cycles_[c].length() || mixed_[c] == 1;
            }
            return ok;
        }

        void unset(int e)
        {
            for (const auto & inc : incidences_[e]) {
                if (dir_[other(inc, e)] < 0)
                    continue;
                --decided_[inc.cycle];
                mixed_[inc.cycle] -= is_mixed(inc);
            }
            dir_[e] = -1;
        }

        auto dfs(std::size_t i) -> bool
        {
            budget_.tick();
            if (i == order_.size())
                return true;
            int e = order_[i];
            for (int d : {1, 0}) {
                bool ok = set(e, d);
                if (ok && dfs(i + 1))
                    return true;
                unset(e);
            }
            return false;
        }

        const Graph & g_;
        std::vector<Cycle> cycles_;
        NodeBudget & budget_;
        std::vector<int> dir_;
        std::vector<std::vector<Incidence>> incidences_;
        std::vector<int> decided_, mixed_;
        std::vector<int> order_;
    };
}

auto search_shortest_alternating_orientation(std::shared_ptr<const Graph> g, NodeBudget & budget)
    -> std::optional<Orientation>
{
    auto cycles = enumerate_shortest_odd_cycles(*g, budget);
    auto forward = ShortestAlternatingSearch(*g, std::move(cycles), budget).run();
    if (! forward)
        return std::nullopt;
    return Orientation(std::move(g), std::move(*forward));
}

} // namespace altcycles
