#include "altcycles/error.hpp"

namespace altcycles {

auto to_string(ErrorKind kind) -> std::string
{
    switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::IncompleteRule: return "IncompleteRule";
    case ErrorKind::ForeignEdge: return "ForeignEdge";
    case ErrorKind::PartialColoring: return "PartialColoring";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ForeignCycle: return "ForeignCycle";
    case ErrorKind::InconsistentCertificates: return "InconsistentCertificates";
    case ErrorKind::TooManyColors: return "TooManyColors";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::ValueNotTwo: return "ValueNotTwo";
    case ErrorKind::PartialMap: return "PartialMap";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & what) :
    std::runtime_error(to_string(kind) + ": " + what),
    kind_(kind)
{
}

namespace {
    auto budget_message(std::uint64_t nodes, std::optional<int> lower, std::optional<int> upper) -> std::string
    {
        std::string m = "search stopped after " + std::to_string(nodes) + " nodes";
        if (lower && upper)
            m += " (bounds " + std::to_string(*lower) + ".." + std::to_string(*upper) + ")";
        return m;
    }
}

BudgetExceeded::BudgetExceeded(std::uint64_t nodes, std::optional<int> lower, std::optional<int> upper) :
    Error(ErrorKind::BudgetExceeded, budget_message(nodes, lower, upper)),
    nodes_(nodes),
    lower_(lower),
    upper_(upper)
{
}

} // namespace altcycles
