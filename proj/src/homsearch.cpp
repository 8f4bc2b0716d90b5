#include "altcycles/homsearch.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "altcycles/coloring_search.hpp"
#include "altcycles/evaluate.hpp"
#include "altcycles/families.hpp"
#include "altcycles/oddcycles.hpp"

namespace altcycles {

auto HomomorphismMap::then(const HomomorphismMap & next) const -> HomomorphismMap
{
    HomomorphismMap result;
    result.image.reserve(image.size());
    for (int t : image) {
        if (t < 0 || t >= next.size())
            throw Error(ErrorKind::PartialMap, "composition leaves the domain of the second map");
        result.image.push_back(next[t]);
    }
    return result;
}

namespace {
    void check_total(int src_order, int dst_order, const HomomorphismMap & map)
    {
        if (map.size() != src_order)
            throw Error(ErrorKind::PartialMap,
                "map covers " + std::to_string(map.size()) + " of " + std::to_string(src_order) + " vertices");
        for (int t : map.image)
            if (t < 0 || t >= dst_order)
                throw Error(ErrorKind::PartialMap, "image index " + std::to_string(t) + " is not a target vertex");
    }
}

auto verify_homomorphism(const Graph & src, const Graph & dst, const HomomorphismMap & map) -> bool
{
    check_total(src.order(), dst.order(), map);
    for (auto [u, v] : src.edges())
        if (map[u] == map[v] || ! dst.adjacent(map[u], map[v]))
            return false;
    return true;
}

auto verify_homomorphism(const Digraph & src, const Digraph & dst, const HomomorphismMap & map) -> bool
{
    check_total(src.order(), dst.order(), map);
    for (auto [u, v] : src.arcs())
        if (! dst.has_arc(map[u], map[v]))
            return false;
    return true;
}

namespace {
    /// Source arcs x->y must land on target arcs. Undirected inputs are
    /// symmetric arc sets, for which only one direction is propagated.
    struct Problem {
        int n = 0;
        int m = 0;
        int words = 0;
        bool symmetric = false;
        /// per source vertex: (other endpoint, true when the arc leaves this vertex)
        std::vector<std::vector<std::pair<int, bool>>> constraints;
        std::vector<std::uint64_t> out_rows, in_rows;

        auto out_row(int t) const -> const std::uint64_t * { return &out_rows[static_cast<std::size_t>(t) * words]; }
        auto in_row(int t) const -> const std::uint64_t * { return &in_rows[static_cast<std::size_t>(t) * words]; }
    };

    auto make_problem(int n, const std::vector<std::pair<int, int>> & src_arcs, int m,
        const std::vector<std::pair<int, int>> & dst_arcs, bool symmetric) -> Problem
    {
        Problem p;
        p.n = n;
        p.m = m;
        p.words = (m + 63) / 64;
        p.symmetric = symmetric;
        p.constraints.assign(n, {});
        for (auto [x, y] : src_arcs) {
            p.constraints[x].emplace_back(y, true);
            if (! symmetric)
                p.constraints[y].emplace_back(x, false);
        }
        for (auto & c : p.constraints) {
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
        }
        p.out_rows.assign(static_cast<std::size_t>(m) * p.words, 0);
        p.in_rows.assign(static_cast<std::size_t>(m) * p.words, 0);
        for (auto [a, b] : dst_arcs) {
            p.out_rows[static_cast<std::size_t>(a) * p.words + b / 64] |= std::uint64_t{1} << (b % 64);
            p.in_rows[static_cast<std::size_t>(b) * p.words + a / 64] |= std::uint64_t{1} << (a % 64);
        }
        return p;
    }

    class HomSolver {
    public:
        HomSolver(const Problem & p, const SearchConfig & cfg, NodeBudget & budget) :
            p_(p),
            cfg_(cfg),
            budget_(budget),
            value_order_(p.m),
            assigned_(p.n, false),
            scratch_(p.words)
        {
            std::iota(value_order_.begin(), value_order_.end(), 0);
            if (cfg.seed) {
                std::mt19937_64 rng(*cfg.seed);
                std::shuffle(value_order_.begin(), value_order_.end(), rng);
            }
        }

        auto run() -> std::optional<HomomorphismMap>
        {
            if (p_.n == 0)
                return HomomorphismMap{};
            if (p_.m == 0)
                return std::nullopt;
            std::vector<std::uint64_t> dom(static_cast<std::size_t>(p_.n) * p_.words, 0);
            for (int x = 0; x < p_.n; ++x)
                for (int t = 0; t < p_.m; ++t)
                    dom[static_cast<std::size_t>(x) * p_.words + t / 64] |= std::uint64_t{1} << (t % 64);
            if (cfg_.propagation == Propagation::ArcConsistency) {
                std::vector<int> all(p_.n);
                std::iota(all.begin(), all.end(), 0);
                if (! arc_consistency(dom, all))
                    return std::nullopt;
            }
            if (! dfs(dom, 0))
                return std::nullopt;
            return solution_;
        }

    private:
        auto row(std::vector<std::uint64_t> & dom, int x) const -> std::uint64_t *
        {
            return &dom[static_cast<std::size_t>(x) * p_.words];
        }

        auto count(const std::uint64_t * d) const -> int
        {
            int c = 0;
            for (int w = 0; w < p_.words; ++w)
                c += std::popcount(d[w]);
            return c;
        }

        /// Restricts D(y) to images compatible with some value of D(x).
        /// Returns -1 on wipeout, 1 if D(y) shrank, 0 otherwise.
        auto revise(std::vector<std::uint64_t> & dom, int x, int y, bool x_to_y) -> int
        {
            const std::uint64_t * dx = row(dom, x);
            std::fill(scratch_.begin(), scratch_.end(), 0);
            for (int w = 0; w < p_.words; ++w) {
                std::uint64_t bits = dx[w];
                while (bits) {
                    int t = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::uint64_t * support = x_to_y ? p_.out_row(t) : p_.in_row(t);
                    for (int k = 0; k < p_.words; ++k)
                        scratch_[k] |= support[k];
                }
            }
            std::uint64_t * dy = row(dom, y);
            bool changed = false, empty = true;
            for (int k = 0; k < p_.words; ++k) {
                std::uint64_t nv = dy[k] & scratch_[k];
                changed |= nv != dy[k];
                empty &= nv == 0;
                dy[k] = nv;
            }
            if (empty)
                return -1;
            return changed ? 1 : 0;
        }

        auto arc_consistency(std::vector<std::uint64_t> & dom, const std::vector<int> & seeds) -> bool
        {
            std::vector<int> queue(seeds);
            std::vector<bool> queued(p_.n, false);
            for (int x : seeds)
                queued[x] = true;
            while (! queue.empty()) {
                int x = queue.back();
                queue.pop_back();
                queued[x] = false;
                for (auto [y, x_to_y] : p_.constraints[x]) {
                    int r = revise(dom, x, y, x_to_y);
                    if (r < 0)
                        return false;
                    if (r > 0 && ! queued[y]) {
                        queued[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            return true;
        }

        auto forward_check(std::vector<std::uint64_t> & dom, int x) -> bool
        {
            for (auto [y, x_to_y] : p_.constraints[x]) {
                if (assigned_[y])
                    continue;
                if (revise(dom, x, y, x_to_y) < 0)
                    return false;
            }
            return true;
        }

        auto choose(std::vector<std::uint64_t> & dom) -> int
        {
            int best = -1, best_size = 0, best_degree = 0;
            for (int x = 0; x < p_.n; ++x) {
                if (assigned_[x])
                    continue;
                int size = count(row(dom, x));
                int degree = static_cast<int>(p_.constraints[x].size());
                if (best < 0 || size < best_size || (size == best_size && degree > best_degree)) {
                    best = x;
                    best_size = size;
                    best_degree = degree;
                }
            }
            return best;
        }

        auto dfs(std::vector<std::uint64_t> & dom, int depth) -> bool
        {
            if (depth == p_.n) {
                solution_.image.assign(p_.n, -1);
                for (int x = 0; x < p_.n; ++x) {
                    const std::uint64_t * d = row(dom, x);
                    for (int w = 0; w < p_.words; ++w)
                        if (d[w]) {
                            solution_.image[x] = w * 64 + std::countr_zero(d[w]);
                            break;
                        }
                }
                return true;
            }
            int x = choose(dom);
            assigned_[x] = true;
            std::vector<std::uint64_t> child(dom.size());
            for (int t : value_order_) {
                if (! (row(dom, x)[t / 64] >> (t % 64) & 1))
                    continue;
                budget_.tick();
                child = dom;
                std::uint64_t * dx = row(child, x);
                std::fill(dx, dx + p_.words, 0);
                dx[t / 64] = std::uint64_t{1} << (t % 64);
                bool ok = cfg_.propagation == Propagation::ArcConsistency ? arc_consistency(child, {x})
                                                                          : forward_check(child, x);
                if (ok && dfs(child, depth + 1))
                    return true;
            }
            assigned_[x] = false;
            return false;
        }

        const Problem & p_;
        const SearchConfig & cfg_;
        NodeBudget & budget_;
        std::vector<int> value_order_;
        std::vector<bool> assigned_;
        std::vector<std::uint64_t> scratch_;
        HomomorphismMap solution_;
    };

    auto symmetric_arcs(const Graph & g) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> arcs;
        arcs.reserve(2 * g.edges().size());
        for (auto [u, v] : g.edges()) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        }
        return arcs;
    }

    auto solve(const Problem & p, const SearchConfig & cfg, NodeBudget & budget) -> std::optional<HomomorphismMap>
    {
        return HomSolver(p, cfg, budget).run();
    }

    auto search_graphs(const Graph & src, const Graph & dst, const SearchConfig & cfg, NodeBudget & budget)
        -> std::optional<HomomorphismMap>
    {
        auto problem = make_problem(src.order(), symmetric_arcs(src), dst.order(), symmetric_arcs(dst), true);
        auto map = solve(problem, cfg, budget);
        if (map && ! verify_homomorphism(src, dst, *map))
            throw Error(ErrorKind::NotAHomomorphism, "search produced a map that is not a homomorphism");
        return map;
    }
}

auto search_homomorphism(const Graph & src, const Graph & dst, const SearchConfig & cfg) -> HomSearchResult
{
    NodeBudget budget(cfg.node_budget);
    HomSearchResult result;
    result.map = search_graphs(src, dst, cfg, budget);
    result.stats = {budget.used(), true};
    return result;
}

auto search_homomorphism(const Digraph & src, const Digraph & dst, const SearchConfig & cfg) -> HomSearchResult
{
    NodeBudget budget(cfg.node_budget);
    auto problem = make_problem(src.order(), src.arcs(), dst.order(), dst.arcs(), false);
    HomSearchResult result;
    result.map = solve(problem, cfg, budget);
    if (result.map && ! verify_homomorphism(src, dst, *result.map))
        throw Error(ErrorKind::NotAHomomorphism, "search produced a map that is not a homomorphism");
    result.stats = {budget.used(), true};
    return result;
}

auto find_homomorphism(const Graph & src, const Graph & dst, const SearchConfig & cfg) -> std::optional<HomomorphismMap>
{
    return search_homomorphism(src, dst, cfg).map;
}

auto find_homomorphism(const Digraph & src, const Digraph & dst, const SearchConfig & cfg)
    -> std::optional<HomomorphismMap>
{
    return search_homomorphism(src, dst, cfg).map;
}

auto hom_to_some_shift(const Graph & g, int m_max, const SearchConfig & cfg) -> std::optional<ShiftWitness>
{
    if (m_max < 2)
        throw Error(ErrorKind::BadParameters, "m_max must be at least 2");
    NodeBudget budget(cfg.node_budget);
    for (int m = 2; m <= m_max; ++m)
        if (auto map = search_graphs(g, shift_graph(m), cfg, budget))
            return ShiftWitness{m, std::move(*map)};
    return std::nullopt;
}

auto shift_hom_from_report(const ConstructionReport & report) -> ShiftWitness
{
    if (! report.coloring)
        throw Error(ErrorKind::ValueNotTwo, "report carries no colouring");
    const Orientation & o = report.orientation;
    const Graph & g = o.base();
    Coloring c = report.coloring->canonical();
    if (directed_local_value(o, c) > 2)
        throw Error(ErrorKind::ValueNotTwo, "some closed out-neighbourhood sees three or more colours");
    const int m = std::max(2, c.num_colors());
    Graph target = shift_graph(m);
    HomomorphismMap map;
    map.image.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto out = o.out_neighbors(v);
        int d = out.empty() ? (c[v] + 1) % m : c[out.front()];
        map.image.push_back(target.index_of(VertexLabel::pair(c[v] + 1, d + 1)));
    }
    if (! verify_homomorphism(g, target, map))
        throw Error(ErrorKind::NotAHomomorphism, "shift map from report does not preserve edges");
    return ShiftWitness{m, std::move(map)};
}

auto exhaustive_orientation_check(const Graph & g, const OrientationPredicate & predicate, NodeBudget & budget,
    bool reversal_symmetry) -> OrientationSweep
{
    const int edges = g.size();
    const int free_edges = reversal_symmetry && edges > 0 ? edges - 1 : edges;
    if (free_edges > 62 || (std::uint64_t{1} << free_edges) > budget.remaining())
        throw BudgetExceeded(budget.used());
    const std::uint64_t total = std::uint64_t{1} << free_edges;

    auto base = std::make_shared<const Graph>(g);
    OrientationSweep sweep;
    std::vector<bool> forward(edges, false);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        budget.tick();
        for (int e = 0; e < free_edges; ++e)
            forward[e] = (mask >> e) & 1;
        Orientation o(base, forward);
        ++sweep.checked;
        if (! predicate(o, budget)) {
            sweep.holds_for_all = false;
            sweep.counterexample = std::move(o);
            break;
        }
    }
    return sweep;
}

auto contains_alternating_odd_cycle(const Orientation & o, NodeBudget & budget) -> bool
{
    return find_alternating_odd_cycle(o, budget).has_value();
}

namespace {
    /// Backtracking over edge directions. Vertices forced to share a colour
    /// (the out-neighbours of one vertex) are kept in an undoable union-find
    /// whose classes must stay independent sets.
    class JointSearch {
    public:
        JointSearch(std::shared_ptr<const Graph> g, int color_budget, NodeBudget & budget) :
            base_(std::move(g)),
            g_(*base_),
            n_(g_.order()),
            color_budget_(color_budget),
            budget_(budget),
            dir_(g_.size(), -1),
            parent_(n_),
            rank_(n_, 0),
            members_(n_),
            nbrs_(n_),
            outrep_(n_, -1)
        {
            std::iota(parent_.begin(), parent_.end(), 0);
            for (int v = 0; v < n_; ++v) {
                members_[v] = std::uint64_t{1} << v;
                for (int w : g_.neighbors(v))
                    nbrs_[v] |= std::uint64_t{1} << w;
            }
        }

        auto run() -> std::optional<ConstructionReport>
        {
            // Reversing every arc preserves alternating odd cycles, and with
            // at least |V| colours a witness exists iff none is present.
            if (color_budget_ >= n_ && g_.size() > 0)
                apply(0, 1);
            if (! dfs())
                return std::nullopt;
            return std::move(result_);
        }

    private:
        struct Entry {
            enum class Kind { Direction, OutRep, Union } kind;
            int a = 0;
            int b = 0;
            int old_rank = 0;
            std::uint64_t old_members = 0;
            std::uint64_t old_nbrs = 0;
        };

        auto find(int x) const -> int
        {
            while (parent_[x] != x)
                x = parent_[x];
            return x;
        }

        auto can_point(int u, int v) const -> bool
        {
            if (outrep_[u] < 0)
                return true;
            int a = find(outrep_[u]), b = find(v);
            return a == b || (members_[a] & nbrs_[b]) == 0;
        }

        void unite(int a, int b)
        {
            if (rank_[a] < rank_[b])
                std::swap(a, b);
            trail_.push_back({Entry::Kind::Union, a, b, rank_[a], members_[a], nbrs_[a]});
            parent_[b] = a;
            members_[a] |= members_[b];
            nbrs_[a] |= nbrs_[b];
            if (rank_[a] == rank_[b])
                ++rank_[a];
        }

        /// Orients edge e; forward means smaller index -> larger index.
        void apply(int e, int forward)
        {
            auto [x, y] = g_.edges()[e];
            int u = forward ? x : y, v = forward ? y : x;
            dir_[e] = forward;
            trail_.push_back({Entry::Kind::Direction, e});
            if (outrep_[u] < 0) {
                outrep_[u] = v;
                trail_.push_back({Entry::Kind::OutRep, u});
            }
            else {
                int a = find(outrep_[u]), b = find(v);
                if (a != b)
                    unite(a, b);
            }
        }

        void undo(std::size_t mark)
        {
            while (trail_.size() > mark) {
                const Entry & t = trail_.back();
                switch (t.kind) {
                case Entry::Kind::Direction: dir_[t.a] = -1; break;
                case Entry::Kind::OutRep: outrep_[t.a] = -1; break;
                case Entry::Kind::Union:
                    parent_[t.b] = t.b;
                    rank_[t.a] = t.old_rank;
                    members_[t.a] = t.old_members;
                    nbrs_[t.a] = t.old_nbrs;
                    break;
                }
                trail_.pop_back();
            }
        }

        auto propagate() -> bool
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int e = 0; e < g_.size(); ++e) {
                    if (dir_[e] >= 0)
                        continue;
                    auto [x, y] = g_.edges()[e];
                    bool fwd = can_point(x, y), bwd = can_point(y, x);
                    if (! fwd && ! bwd)
                        return false;
                    if (fwd != bwd) {
                        apply(e, fwd ? 1 : 0);
                        changed = true;
                    }
                }
            }
            return true;
        }

        auto choose() const -> int
        {
            int best = -1, best_score = -1;
            for (int e = 0; e < g_.size(); ++e) {
                if (dir_[e] >= 0)
                    continue;
                auto [x, y] = g_.edges()[e];
                int score = (outrep_[x] >= 0) + (outrep_[y] >= 0);
                if (score > best_score) {
                    best = e;
                    best_score = score;
                }
            }
            return best;
        }

        auto finish() -> bool
        {
            std::vector<int> class_of(n_, -1), root_class(n_, -1);
            int classes = 0;
            for (int v = 0; v < n_; ++v) {
                int r = find(v);
                if (root_class[r] < 0)
                    root_class[r] = classes++;
                class_of[v] = root_class[r];
            }
            std::vector<int> colors;
            if (classes <= color_budget_) {
                colors = class_of;
            }
            else {
                std::vector<VertexLabel> labels;
                for (int c = 0; c < classes; ++c)
                    labels.push_back(VertexLabel::integer(c));
                std::vector<std::pair<int, int>> quotient_edges;
                for (auto [u, v] : g_.edges())
                    quotient_edges.emplace_back(class_of[u], class_of[v]);
                auto qc = find_k_coloring(Graph::from_indices(std::move(labels), std::move(quotient_edges)),
                    color_budget_, budget_);
                if (! qc)
                    return false;
                for (int v = 0; v < n_; ++v)
                    colors.push_back((*qc)[class_of[v]]);
            }

            std::vector<bool> forward(dir_.begin(), dir_.end());
            ConstructionReport report{"", Orientation(base_, std::move(forward)), Coloring(colors).canonical(), {}};
            for (const char * name : {check_names::proper_coloring, check_names::directed_local_value_2,
                     check_names::color_count})
                report.checks.push_back(run_check(report, name, std::nullopt, budget_));
            if (! report.all_passed())
                throw Error(ErrorKind::InconsistentCertificates, "joint search produced an invalid witness");
            result_ = std::move(report);
            return true;
        }

        auto dfs() -> bool
        {
            budget_.tick();
            if (! propagate())
                return false;
            int e = choose();
            if (e < 0)
                return finish();
            std::size_t mark = trail_.size();
            for (int forward : {1, 0}) {
                apply(e, forward);
                if (dfs())
                    return true;
                undo(mark);
            }
            return false;
        }

        std::shared_ptr<const Graph> base_;
        const Graph & g_;
        int n_;
        int color_budget_;
        NodeBudget & budget_;
        std::vector<int> dir_;
        std::vector<int> parent_, rank_;
        std::vector<std::uint64_t> members_, nbrs_;
        std::vector<int> outrep_;
        std::vector<Entry> trail_;
        std::optional<ConstructionReport> result_;
    };
}

auto joint_orientation_coloring_search(std::shared_ptr<const Graph> g, int color_budget, const SearchConfig & cfg)
    -> JointSearchResult
{
    if (g->order() > 64)
        throw Error(ErrorKind::BadParameters, "joint search supports at most 64 vertices");
    if (color_budget < 1)
        throw Error(ErrorKind::BadParameters, "colour budget must be positive");
    NodeBudget budget(cfg.node_budget);
    JointSearchResult result;
    if (g->order() == 0 || (g->size() > 0 && color_budget < 2)) {
        if (g->order() == 0)
            result.report = ConstructionReport{"", Orientation(g, {}), Coloring{}, {}};
    }
    else {
        result.report = JointSearch(g, color_budget, budget).run();
    }
    result.stats = {budget.used(), true};
    return result;
}

auto joint_orientation_coloring_search(const Graph & g, int color_budget, const SearchConfig & cfg)
    -> std::optional<ConstructionReport>
{
    return joint_orientation_coloring_search(std::make_shared<const Graph>(g), color_budget, cfg).report;
}

} // namespace altcycles
