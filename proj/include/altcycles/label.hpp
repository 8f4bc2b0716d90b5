#pragma once

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace altcycles {

/// Structured vertex name. The kinds are ordered as declared, and within a
/// kind labels compare lexicographically by payload. This order is the single
/// tie-breaker used everywhere an arbitrary choice has to be made.
class VertexLabel {
public:
    enum class Kind { Int = 0, Set = 1, Level = 2, Apex = 3, Pair = 4 };

    VertexLabel() : VertexLabel(integer(0)) {}

    static auto integer(int n) -> VertexLabel;
    /// Elements must be strictly increasing and positive.
    static auto set(std::vector<int> elements) -> VertexLabel;
    static auto level(const VertexLabel & base, int level) -> VertexLabel;
    static auto apex() -> VertexLabel;
    /// Requires i != j.
    static auto pair(int i, int j) -> VertexLabel;

    auto kind() const noexcept -> Kind { return kind_; }

    auto as_int() const -> int;
    auto elements() const -> const std::vector<int> &;
    auto base() const -> const VertexLabel &;
    auto level_index() const -> int;
    auto as_pair() const -> std::pair<int, int>;

    auto operator<=>(const VertexLabel & other) const -> std::strong_ordering;
    auto operator==(const VertexLabel & other) const -> bool { return (*this <=> other) == 0; }

    /// Compact human-readable form: 3, {1,3}, (v,i), z, (1,2).
    auto to_string() const -> std::string;

private:
    VertexLabel(Kind kind, std::vector<int> ints, std::shared_ptr<const VertexLabel> base);

    Kind kind_;
    std::vector<int> ints_;
    std::shared_ptr<const VertexLabel> base_;
};

} // namespace altcycles
