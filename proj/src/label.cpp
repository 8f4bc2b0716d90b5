#include "altcycles/label.hpp"

#include "altcycles/error.hpp"

namespace altcycles {

VertexLabel::VertexLabel(Kind kind, std::vector<int> ints, std::shared_ptr<const VertexLabel> base) :
    kind_(kind),
    ints_(std::move(ints)),
    base_(std::move(base))
{
}

auto VertexLabel::integer(int n) -> VertexLabel { return VertexLabel(Kind::Int, {n}, nullptr); }

auto VertexLabel::set(std::vector<int> elements) -> VertexLabel
{
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 1)
            throw Error(ErrorKind::BadParameters, "set label elements must be positive");
        if (i > 0 && elements[i] <= elements[i - 1])
            throw Error(ErrorKind::BadParameters, "set label elements must be strictly increasing");
    }
    return VertexLabel(Kind::Set, std::move(elements), nullptr);
}

auto VertexLabel::level(const VertexLabel & base, int level) -> VertexLabel
{
    if (level < 0)
        throw Error(ErrorKind::BadParameters, "level must be nonnegative");
    return VertexLabel(Kind::Level, {level}, std::make_shared<const VertexLabel>(base));
}

auto VertexLabel::apex() -> VertexLabel { return VertexLabel(Kind::Apex, {}, nullptr); }

auto VertexLabel::pair(int i, int j) -> VertexLabel
{
    if (i == j)
        throw Error(ErrorKind::BadParameters, "pair label needs distinct coordinates");
    return VertexLabel(Kind::Pair, {i, j}, nullptr);
}

auto VertexLabel::as_int() const -> int
{
    if (kind_ != Kind::Int)
        throw Error(ErrorKind::BadParameters, "label is not an integer");
    return ints_[0];
}

auto VertexLabel::elements() const -> const std::vector<int> &
{
    if (kind_ != Kind::Set)
        throw Error(ErrorKind::BadParameters, "label is not a set");
    return ints_;
}

auto VertexLabel::base() const -> const VertexLabel &
{
    if (kind_ != Kind::Level)
        throw Error(ErrorKind::BadParameters, "label is not a level label");
    return *base_;
}

auto VertexLabel::level_index() const -> int
{
    if (kind_ != Kind::Level)
        throw Error(ErrorKind::BadParameters, "label is not a level label");
    return ints_[0];
}

auto VertexLabel::as_pair() const -> std::pair<int, int>
{
    if (kind_ != Kind::Pair)
        throw Error(ErrorKind::BadParameters, "label is not a pair");
    return {ints_[0], ints_[1]};
}

auto VertexLabel::operator<=>(const VertexLabel & other) const -> std::strong_ordering
{
    if (kind_ != other.kind_)
        return static_cast<int>(kind_) <=> static_cast<int>(other.kind_);
    if (kind_ == Kind::Level) {
        if (auto c = *base_ <=> *other.base_; c != 0)
            return c;
    }
    return ints_ <=> other.ints_;
}

auto VertexLabel::to_string() const -> std::string
{
    auto join = [](const std::vector<int> & xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };

    switch (kind_) {
    case Kind::Int: return std::to_string(ints_[0]);
    case Kind::Set: return "{" + join(ints_) + "}";
    case Kind::Level: return "(" + base_->to_string() + "," + std::to_string(ints_[0]) + ")";
    case Kind::Apex: return "z";
    case Kind::Pair: return "(" + join(ints_) + ")";
    }
    return "?";
}

} // namespace altcycles
