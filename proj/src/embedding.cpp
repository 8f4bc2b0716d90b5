#include "altcycles/embedding.hpp"

#include <algorithm>

namespace altcycles {

namespace {
    class Embedder {
    public:
        Embedder(const Graph & pattern, const Graph & host, NodeBudget & budget) :
            p_(pattern),
            h_(host),
            budget_(budget),
            image_(pattern.order(), -1),
            used_(host.order(), false)
        {
            // connectivity order: each next vertex has the most placed neighbours
            std::vector<int> placed_nbrs(p_.order(), 0);
            std::vector<bool> placed(p_.order(), false);
            for (int step = 0; step < p_.order(); ++step) {
                int best = -1;
                for (int v = 0; v < p_.order(); ++v) {
                    if (placed[v])
                        continue;
                    if (best < 0 || placed_nbrs[v] > placed_nbrs[best]
                        || (placed_nbrs[v] == placed_nbrs[best] && p_.degree(v) > p_.degree(best)))
                        best = v;
                }
                placed[best] = true;
                order_.push_back(best);
                for (int w : p_.neighbors(best))
                    ++placed_nbrs[w];
            }
        }

        auto run() -> std::optional<std::vector<int>>
        {
            if (p_.order() > h_.order())
                return std::nullopt;
            if (search(0))
                return image_;
            return std::nullopt;
        }

    private:
        auto fits(int p, int x) const -> bool
        {
            if (used_[x] || h_.degree(x) < p_.degree(p))
                return false;
            for (int q : p_.neighbors(p))
                if (image_[q] >= 0 && ! h_.adjacent(image_[q], x))
                    return false;
            return true;
        }

        auto search(std::size_t depth) -> bool
        {
            if (depth == order_.size())
                return true;
            budget_.tick();
            int p = order_[depth];

            int anchor = -1;
            for (int q : p_.neighbors(p))
                if (image_[q] >= 0) {
                    anchor = image_[q];
                    break;
                }

            auto attempt = [&](int x) {
                if (! fits(p, x))
                    return false;
                image_[p] = x;
                used_[x] = true;
                if (search(depth + 1))
                    return true;
                image_[p] = -1;
                used_[x] = false;
                return false;
            };

            if (anchor >= 0) {
                for (int x : h_.neighbors(anchor))
                    if (attempt(x))
                        return true;
            }
            else {
                for (int x = 0; x < h_.order(); ++x)
                    if (attempt(x))
                        return true;
            }
            return false;
        }

        const Graph & p_;
        const Graph & h_;
        NodeBudget & budget_;
        std::vector<int> image_;
        std::vector<bool> used_;
        std::vector<int> order_;
    };
}

auto find_subgraph_embedding(const Graph & pattern, const Graph & host, NodeBudget & budget)
    -> std::optional<std::vector<int>>
{
    return Embedder(pattern, host, budget).run();
}

auto find_isomorphism(const Graph & a, const Graph & b, NodeBudget & budget) -> std::optional<std::vector<int>>
{
    if (a.order() != b.order() || a.size() != b.size())
        return std::nullopt;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return std::nullopt;
    return find_subgraph_embedding(a, b, budget);
}

auto are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    NodeBudget budget;
    return find_isomorphism(a, b, budget).has_value();
}

} // namespace altcycles
