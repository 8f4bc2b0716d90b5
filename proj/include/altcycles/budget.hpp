#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>

#include "altcycles/error.hpp"

namespace altcycles {

/// Logical search allowance counted in node expansions. Searches never look
/// at wall-clock time; the suite runner maps its timeouts onto these counts.
class NodeBudget {
public:
    static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

    explicit NodeBudget(std::uint64_t limit = 50'000'000) : limit_(limit) {}

    void tick()
    {
        if (++used_ > limit_)
            throw BudgetExceeded(used_);
    }

    /// Charges work done under a separate budget.
    void consume(std::uint64_t nodes)
    {
        used_ = nodes > limit_ - std::min(used_, limit_) ? limit_ + 1 : used_ + nodes;
        if (used_ > limit_)
            throw BudgetExceeded(used_);
    }

    auto used() const noexcept -> std::uint64_t { return used_; }
    auto limit() const noexcept -> std::uint64_t { return limit_; }
    auto remaining() const noexcept -> std::uint64_t { return used_ >= limit_ ? 0 : limit_ - used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace altcycles
