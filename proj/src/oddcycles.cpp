#include "altcycles/oddcycles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "altcycles/coloring_search.hpp"
#include "altcycles/evaluate.hpp"

namespace altcycles {

auto canonical_cycle(std::vector<int> vertices) -> Cycle
{
    if (vertices.empty())
        return Cycle{};
    auto smallest = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), smallest, vertices.end());
    if (vertices.size() > 2 && vertices.back() < vertices[1])
        std::reverse(vertices.begin() + 1, vertices.end());
    return Cycle{std::move(vertices)};
}

void validate_cycle(const Graph & g, const Cycle & c)
{
    const auto & vs = c.vertices;
    if (vs.size() < 3)
        throw Error(ErrorKind::ForeignCycle, "a cycle needs at least three vertices");
    std::vector<bool> seen(g.order(), false);
    for (int v : vs) {
        if (v < 0 || v >= g.order())
            throw Error(ErrorKind::ForeignCycle, "cycle vertex out of range");
        if (seen[v])
            throw Error(ErrorKind::ForeignCycle, "cycle repeats " + g.label(v).to_string());
        seen[v] = true;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int a = vs[i], b = vs[(i + 1) % vs.size()];
        if (! g.adjacent(a, b))
            throw Error(ErrorKind::ForeignCycle, g.label(a).to_string() + "-" + g.label(b).to_string() + " is not an edge");
    }
}

auto is_bipartite(const Graph & g) -> bool { return ! odd_girth(g).has_value(); }

auto odd_girth(const Graph & g) -> std::optional<int>
{
    const int n = g.order();
    std::optional<int> best;
    std::vector<int> dist(2 * static_cast<std::size_t>(n));
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[2 * s] = 0;
        queue.assign(1, 2 * s);
        while (! queue.empty()) {
            int state = queue.front();
            queue.pop_front();
            int v = state / 2, parity = state % 2;
            if (best && dist[state] + 1 >= *best)
                break;
            for (int w : g.neighbors(v)) {
                int next = 2 * w + (1 - parity);
                if (dist[next] < 0) {
                    dist[next] = dist[state] + 1;
                    queue.push_back(next);
                }
            }
        }
        // shortest odd closed walk through s; the overall minimum is an odd cycle
        if (dist[2 * s + 1] > 0 && (! best || dist[2 * s + 1] < *best))
            best = dist[2 * s + 1];
    }
    return best;
}

namespace {
    class CycleEnumerator {
    public:
        CycleEnumerator(const Graph & g, int length, NodeBudget & budget) :
            g_(g),
            length_(length),
            budget_(budget),
            on_path_(g.order(), false),
            dist_(g.order(), -1)
        {
        }

        auto run() -> std::vector<Cycle>
        {
            for (int s = 0; s < g_.order(); ++s) {
                distances_from(s);
                path_.assign(1, s);
                on_path_[s] = true;
                extend(s);
                on_path_[s] = false;
            }
            return std::move(found_);
        }

    private:
        /// BFS distances to s inside the subgraph on vertices >= s.
        void distances_from(int s)
        {
            std::fill(dist_.begin(), dist_.end(), -1);
            dist_[s] = 0;
            std::deque<int> q{s};
            while (! q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int w : g_.neighbors(v))
                    if (w > s && dist_[w] < 0) {
                        dist_[w] = dist_[v] + 1;
                        q.push_back(w);
                    }
            }
        }

        void extend(int s)
        {
            budget_.tick();
            int depth = static_cast<int>(path_.size());
            int last = path_.back();
            if (depth == length_) {
                if (g_.adjacent(last, s) && path_[1] < last)
                    found_.push_back(Cycle{path_});
                return;
            }
            for (int w : g_.neighbors(last)) {
                if (w <= s || on_path_[w] || dist_[w] < 0)
                    continue;
                // after stepping to w, length_ - depth edges remain to close the cycle
                if (dist_[w] > length_ - depth)
                    continue;
                path_.push_back(w);
                on_path_[w] = true;
                extend(s);
                on_path_[w] = false;
                path_.pop_back();
            }
        }

        const Graph & g_;
        int length_;
        NodeBudget & budget_;
        std::vector<bool> on_path_;
        std::vector<int> dist_;
        std::vector<int> path_;
        std::vector<Cycle> found_;
    };
}

auto enumerate_cycles(const Graph & g, int length, NodeBudget & budget) -> std::vector<Cycle>
{
    if (length < 3)
        throw Error(ErrorKind::BadParameters, "cycles have length >= 3");
    auto cycles = CycleEnumerator(g, length, budget).run();
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

auto enumerate_shortest_odd_cycles(const Graph & g, NodeBudget & budget) -> std::vector<Cycle>
{
    auto girth = odd_girth(g);
    if (! girth)
        throw Error(ErrorKind::BadParameters, "graph is bipartite");
    return enumerate_cycles(g, *girth, budget);
}

auto alternation_profile(const Orientation & o, const Cycle & c) -> AlternationProfile
{
    validate_cycle(o.base(), c);
    AlternationProfile profile;
    const auto & vs = c.vertices;
    const std::size_t len = vs.size();
    for (std::size_t i = 0; i < len; ++i) {
        int v = vs[i];
        int prev = vs[(i + len - 1) % len];
        int next = vs[(i + 1) % len];
        int out = o.has_arc(v, prev) + o.has_arc(v, next);
        if (out == 2)
            ++profile.sources;
        else if (out == 0)
            ++profile.sinks;
        else
            profile.mixed.push_back(v);
    }
    return profile;
}

auto is_alternating(const Orientation & o, const Cycle & c) -> bool
{
    auto profile = alternation_profile(o, c);
    return c.length() % 2 == 1 && profile.mixed.size() == 1;
}

namespace {
    /// Alternating path search for one anchor. State (x, parity) records the
    /// parity of the number of path edges so far: from even states the path
    /// leaves along an out-arc, from odd states it enters along an in-arc.
    class AlternatingSearch {
    public:
        AlternatingSearch(const Orientation & o, NodeBudget & budget) :
            o_(o),
            g_(o.base()),
            budget_(budget),
            n_(g_.order()),
            out_(n_),
            in_(n_),
            good_(2 * static_cast<std::size_t>(n_)),
            used_(n_, false)
        {
            for (int v = 0; v < n_; ++v) {
                out_[v] = o.out_neighbors(v);
                in_[v] = o.in_neighbors(v);
            }
        }

        auto run() -> std::optional<Cycle>
        {
            for (int anchor = 0; anchor < n_; ++anchor) {
                if (out_[anchor].empty() || in_[anchor].empty())
                    continue;
                mark_good(anchor);
                used_[anchor] = true;
                path_.assign(1, anchor);
                for (int first : out_[anchor]) {
                    if (! good_[2 * first + 1])
                        continue;
                    if (dfs(anchor, first, 1))
                        return canonical_cycle(path_);
                }
                used_[anchor] = false;
            }
            return std::nullopt;
        }

    private:
        /// Reverse reachability (ignoring simplicity) to the closing states.
        void mark_good(int anchor)
        {
            std::fill(good_.begin(), good_.end(), false);
            std::deque<int> q;
            for (int x : in_[anchor]) {
                good_[2 * x] = true;
                q.push_back(2 * x);
            }
            while (! q.empty()) {
                int state = q.front();
                q.pop_front();
                int y = state / 2, parity = state % 2;
                if (parity == 1) {
                    // (x,0) -> (y,1) along x->y
                    for (int x : in_[y])
                        if (x != anchor && ! good_[2 * x]) {
                            good_[2 * x] = true;
                            q.push_back(2 * x);
                        }
                }
                else {
                    // (x,1) -> (y,0) along y->x
                    for (int x : out_[y])
                        if (x != anchor && ! good_[2 * x + 1]) {
                            good_[2 * x + 1] = true;
                            q.push_back(2 * x + 1);
                        }
                }
            }
        }

        auto dfs(int anchor, int x, int parity) -> bool
        {
            budget_.tick();
            used_[x] = true;
            path_.push_back(x);
            if (parity == 0 && o_.has_arc(x, anchor))
                return true;
            const auto & next = parity == 0 ? out_[x] : in_[x];
            int next_parity = 1 - parity;
            for (int y : next) {
                if (used_[y] || ! good_[2 * y + next_parity])
                    continue;
                if (dfs(anchor, y, next_parity))
                    return true;
            }
            path_.pop_back();
            used_[x] = false;
            return false;
        }

        const Orientation & o_;
        const Graph & g_;
        NodeBudget & budget_;
        int n_;
        std::vector<std::vector<int>> out_, in_;
        std::vector<bool> good_;
        std::vector<bool> used_;
        std::vector<int> path_;
    };

    auto find_root(std::vector<int> & parent, int x) -> int
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
}

auto find_alternating_odd_cycle(const Orientation & o, NodeBudget & budget) -> std::optional<Cycle>
{
    return AlternatingSearch(o, budget).run();
}

auto certify_no_alternating_odd_cycle(const Orientation & o, NodeBudget & budget) -> std::optional<Coloring>
{
    const Graph & g = o.base();
    const int n = g.order();

    // All out-neighbours of a vertex must share one colour: merge them.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int v = 0; v < n; ++v) {
        int first = -1;
        for (int w : g.neighbors(v)) {
            if (! o.has_arc(v, w))
                continue;
            budget.tick();
            if (first < 0)
                first = w;
            else
                parent[find_root(parent, w)] = find_root(parent, first);
        }
    }

    // A forced class containing an edge makes every witness improper.
    for (auto [u, v] : g.edges())
        if (find_root(parent, u) == find_root(parent, v))
            return std::nullopt;

    std::vector<int> class_of(n, -1);
    std::vector<int> root_class(n, -1);
    int classes = 0;
    for (int v = 0; v < n; ++v) {
        int r = find_root(parent, v);
        if (root_class[r] < 0)
            root_class[r] = classes++;
        class_of[v] = root_class[r];
    }
    std::vector<VertexLabel> labels;
    for (int c = 0; c < classes; ++c)
        labels.push_back(VertexLabel::integer(c));
    std::vector<std::pair<int, int>> quotient_edges;
    for (auto [u, v] : g.edges())
        quotient_edges.emplace_back(class_of[u], class_of[v]);
    Graph quotient = Graph::from_indices(std::move(labels), std::move(quotient_edges));

    // Colour budget grows from 2 up to the number of classes, which always succeeds.
    for (int k = std::min(2, classes); k <= classes; ++k) {
        if (auto qc = find_k_coloring(quotient, k, budget)) {
            std::vector<int> colors(n);
            for (int v = 0; v < n; ++v)
                colors[v] = (*qc)[class_of[v]];
            return Coloring(std::move(colors)).canonical();
        }
    }
    return Coloring(class_of).canonical();
}

auto verify_certificate(const Orientation & o, const Certificate & cert) -> bool
{
    if (cert.found_cycle()) {
        try {
            return is_alternating(o, cert.cycle());
        }
        catch (const Error &) {
            return false;
        }
    }
    const auto & c = cert.coloring();
    if (c.size() != o.base().order() || ! is_proper(o.base(), c))
        return false;
    return directed_local_value(o, c) <= 2;
}

auto alternating_verdict(const Orientation & o, NodeBudget & budget) -> Certificate
{
    auto cycle = find_alternating_odd_cycle(o, budget);
    auto witness = certify_no_alternating_odd_cycle(o, budget);
    if (cycle.has_value() == witness.has_value())
        throw Error(ErrorKind::InconsistentCertificates,
            cycle ? "found both an alternating odd cycle and a witness colouring"
                  : "found neither an alternating odd cycle nor a witness colouring");
    Certificate cert = cycle ? Certificate{*cycle} : Certificate{*witness};
    if (! verify_certificate(o, cert))
        throw Error(ErrorKind::InconsistentCertificates, "certificate failed re-verification");
    return cert;
}

auto all_alternating(const Orientation & o, const std::vector<Cycle> & cycles) -> ShortestCycleCheck
{
    ShortestCycleCheck result;
    for (const auto & c : cycles) {
        ++result.cycles_checked;
        if (! is_alternating(o, c)) {
            result.all_alternating = false;
            result.counterexample = c;
            break;
        }
    }
    return result;
}

auto all_shortest_odd_cycles_alternating(const Orientation & o, NodeBudget & budget) -> ShortestCycleCheck
{
    return all_alternating(o, enumerate_shortest_odd_cycles(o.base(), budget));
}

} // namespace altcycles
