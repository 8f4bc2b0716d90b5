#include "altcycles/coloring_search.hpp"

#include <algorithm>
#include <queue>

namespace altcycles {

namespace {
    /// DSATUR backtracking for a fixed number of colours. count[v*k+c] is the
    /// number of coloured neighbours of v holding colour c.
    class KColorer {
    public:
        KColorer(const Graph & g, int k, NodeBudget & budget) :
            g_(g),
            k_(k),
            budget_(budget),
            color_(g.order(), -1),
            count_(static_cast<std::size_t>(g.order()) * k, 0),
            free_(g.order(), k)
        {
        }

        auto run() -> std::optional<Coloring>
        {
            if (search(0))
                return Coloring(color_);
            return std::nullopt;
        }

    private:
        auto pick() const -> int
        {
            int best = -1;
            for (int v = 0; v < g_.order(); ++v) {
                if (color_[v] >= 0)
                    continue;
                if (best < 0 || free_[v] < free_[best] || (free_[v] == free_[best] && g_.degree(v) > g_.degree(best)))
                    best = v;
            }
            return best;
        }

        auto assign(int v, int c) -> bool
        {
            color_[v] = c;
            bool wiped = false;
            for (int w : g_.neighbors(v))
                if (color_[w] < 0 && count_[w * k_ + c]++ == 0 && --free_[w] == 0)
                    wiped = true;
            return ! wiped;
        }

        void unassign(int v, int c)
        {
            for (int w : g_.neighbors(v))
                if (color_[w] < 0 && --count_[w * k_ + c] == 0)
                    ++free_[w];
            color_[v] = -1;
        }

        auto search(int coloured) -> bool
        {
            if (coloured == g_.order())
                return true;
            budget_.tick();
            int v = pick();
            int limit = std::min(used_ + 1, k_);
            for (int c = 0; c < limit; ++c) {
                if (count_[v * k_ + c] != 0)
                    continue;
                int saved_used = used_;
                used_ = std::max(used_, c + 1);
                bool ok = assign(v, c) && search(coloured + 1);
                if (ok)
                    return true;
                unassign(v, c);
                used_ = saved_used;
            }
            return false;
        }

        const Graph & g_;
        int k_;
        NodeBudget & budget_;
        std::vector<int> color_;
        std::vector<int> count_;
        std::vector<int> free_;
        int used_ = 0;
    };

    auto is_bipartite(const Graph & g) -> bool
    {
        std::vector<int> side(g.order(), -1);
        for (int s = 0; s < g.order(); ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (! q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : g.neighbors(v)) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[v];
                        q.push(w);
                    }
                    else if (side[w] == side[v])
                        return false;
                }
            }
        }
        return true;
    }

    /// Proper colouring with every closed neighbourhood showing at most
    /// `limit` colours. Colours are introduced in order, one new colour per
    /// branch.
    class LocalColorer {
    public:
        LocalColorer(const Graph & g, int limit, NodeBudget & budget) :
            g_(g),
            limit_(limit),
            budget_(budget),
            color_(g.order(), -1),
            count_(static_cast<std::size_t>(g.order()) * g.order(), 0),
            distinct_(g.order(), 0)
        {
            // breadth-first order so neighbourhood constraints engage early
            std::vector<bool> seen(g.order(), false);
            std::vector<int> by_degree(g.order());
            for (int v = 0; v < g.order(); ++v)
                by_degree[v] = v;
            std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
            for (int s : by_degree) {
                if (seen[s])
                    continue;
                seen[s] = true;
                std::queue<int> q;
                q.push(s);
                while (! q.empty()) {
                    int v = q.front();
                    q.pop();
                    order_.push_back(v);
                    for (int w : g.neighbors(v))
                        if (! seen[w]) {
                            seen[w] = true;
                            q.push(w);
                        }
                }
            }
        }

        auto feasible() -> bool { return search(0); }

    private:
        auto at(int v, int c) -> int & { return count_[static_cast<std::size_t>(v) * g_.order() + c]; }

        auto place(int v, int c) -> bool
        {
            bool ok = true;
            color_[v] = c;
            if (at(v, c)++ == 0 && ++distinct_[v] > limit_)
                ok = false;
            for (int w : g_.neighbors(v))
                if (at(w, c)++ == 0 && ++distinct_[w] > limit_)
                    ok = false;
            return ok;
        }

        void lift(int v, int c)
        {
            if (--at(v, c) == 0)
                --distinct_[v];
            for (int w : g_.neighbors(v))
                if (--at(w, c) == 0)
                    --distinct_[w];
            color_[v] = -1;
        }

        auto search(std::size_t depth) -> bool
        {
            if (depth == order_.size())
                return true;
            budget_.tick();
            int v = order_[depth];
            for (int c = 0; c <= used_ && c < g_.order(); ++c) {
                bool clash = false;
                for (int w : g_.neighbors(v))
                    if (color_[w] == c) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
                int saved = used_;
                if (c == used_)
                    ++used_;
                bool ok = place(v, c) && search(depth + 1);
                if (ok)
                    return true;
                lift(v, c);
                used_ = saved;
            }
            return false;
        }

        const Graph & g_;
        int limit_;
        NodeBudget & budget_;
        std::vector<int> color_;
        std::vector<int> count_;
        std::vector<int> distinct_;
        std::vector<int> order_;
        int used_ = 0;
    };
}

auto find_k_coloring(const Graph & g, int k, NodeBudget & budget) -> std::optional<Coloring>
{
    const int n = g.order();
    if (n == 0)
        return Coloring();
    if (k <= 0)
        return std::nullopt;
    if (k >= n) {
        std::vector<int> distinct(n);
        for (int v = 0; v < n; ++v)
            distinct[v] = v;
        return Coloring(std::move(distinct)).canonical();
    }
    return KColorer(g, k, budget).run();
}

auto dsatur_coloring(const Graph & g) -> Coloring
{
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n + 1, false));
    std::vector<int> saturation(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int x = 0; x < n; ++x) {
            if (color[x] >= 0)
                continue;
            if (v < 0 || saturation[x] > saturation[v] || (saturation[x] == saturation[v] && g.degree(x) > g.degree(v)))
                v = x;
        }
        int c = 0;
        while (seen[v][c])
            ++c;
        color[v] = c;
        for (int w : g.neighbors(v))
            if (! seen[w][c]) {
                seen[w][c] = true;
                ++saturation[w];
            }
    }
    return Coloring(std::move(color));
}

auto greedy_clique_bound(const Graph & g) -> int
{
    int best = g.order() > 0 ? 1 : 0;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> candidates(g.neighbors(s).begin(), g.neighbors(s).end());
        std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> clique{s};
        for (int c : candidates)
            if (std::all_of(clique.begin(), clique.end(), [&](int x) { return g.adjacent(x, c); }))
                clique.push_back(c);
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

auto chromatic_number(const Graph & g, NodeBudget & budget) -> int
{
    if (g.order() == 0)
        return 0;
    if (g.size() == 0)
        return 1;
    int lower = greedy_clique_bound(g);
    int upper = dsatur_coloring(g).num_colors();
    for (int k = lower; k < upper; ++k) {
        try {
            if (find_k_coloring(g, k, budget))
                return k;
        }
        catch (const BudgetExceeded & e) {
            throw BudgetExceeded(e.nodes(), k, upper);
        }
    }
    return upper;
}

auto chromatic_number(const Graph & g) -> int
{
    NodeBudget budget;
    return chromatic_number(g, budget);
}

auto local_chromatic_number(const Graph & g, NodeBudget & budget) -> int
{
    if (g.order() == 0)
        return 0;
    if (g.size() == 0)
        return 1;
    int lower = is_bipartite(g) ? 2 : 3;
    int upper = chromatic_number(g, budget);
    for (int t = lower; t < upper; ++t) {
        try {
            if (LocalColorer(g, t, budget).feasible())
                return t;
        }
        catch (const BudgetExceeded & e) {
            throw BudgetExceeded(e.nodes(), t, upper);
        }
    }
    return upper;
}

} // namespace altcycles
