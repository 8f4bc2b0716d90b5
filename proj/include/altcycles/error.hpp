#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace altcycles {

enum class ErrorKind {
    DuplicateVertex,
    UnknownEndpoint,
    SelfLoop,
    IncompleteRule,
    ForeignEdge,
    PartialColoring,
    ImproperColoring,
    BudgetExceeded,
    BadParameters,
    ForeignCycle,
    InconsistentCertificates,
    TooManyColors,
    NotAHomomorphism,
    InvalidPartition,
    StructureMismatch,
    ValueNotTwo,
    PartialMap,
    IoError,
    ParseError,
};

auto to_string(ErrorKind kind) -> std::string;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what);

    auto kind() const noexcept -> ErrorKind { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when a search spends its node allowance before reaching a verdict.
/// Exact-value searches attach the best bounds known at that moment.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::uint64_t nodes, std::optional<int> lower = std::nullopt,
        std::optional<int> upper = std::nullopt);

    auto nodes() const noexcept -> std::uint64_t { return nodes_; }
    auto lower_bound() const noexcept -> std::optional<int> { return lower_; }
    auto upper_bound() const noexcept -> std::optional<int> { return upper_; }

private:
    std::uint64_t nodes_;
    std::optional<int> lower_, upper_;
};

} // namespace altcycles
