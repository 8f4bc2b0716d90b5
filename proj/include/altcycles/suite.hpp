#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "altcycles/budget.hpp"

namespace altcycles {

enum class Verdict { Pass, Fail, Timeout };

auto to_string(Verdict v) -> std::string;

struct ItemOutcome {
    Verdict verdict = Verdict::Pass;
    std::string detail;
    nlohmann::json certificate = nlohmann::json::object();
};

struct SuiteItem {
    std::string id;
    /// Acceptance criterion number this item covers.
    int criterion = 0;
    std::string description;
    /// Canonical description of the inputs; hashed for the cache.
    std::string inputs;
    std::uint64_t budget = 0;
    double time_limit_seconds = 0;
    /// Optional items report a timeout instead of failing when they run out.
    bool optional = false;
    std::function<ItemOutcome(NodeBudget &)> run;
};

struct ResultRecord {
    std::string id;
    int criterion = 0;
    Verdict verdict = Verdict::Fail;
    std::string detail;
    nlohmann::json certificate = nlohmann::json::object();
    double seconds = 0;
    std::string input_hash;
    bool from_cache = false;
};

auto suite_catalog() -> const std::vector<SuiteItem> &;

/// FNV-1a over the item's id, inputs and budget, as 16 hex digits.
auto input_hash(const SuiteItem & item) -> std::string;

/// Runs one item. Budget exhaustion becomes Timeout, any other exception Fail.
auto run_item(const SuiteItem & item) -> ResultRecord;

auto record_to_json(const ResultRecord & r) -> nlohmann::json;
auto record_from_json(const nlohmann::json & j) -> ResultRecord;

struct SuiteOptions {
    /// Shell-style glob over item ids; empty selects everything.
    std::string filter;
    int jobs = 1;
    std::optional<std::filesystem::path> cache_dir;
};

struct SuiteReport {
    std::vector<ResultRecord> records;

    /// 0 all pass, 1 any failure, 3 only timeouts besides passes.
    auto exit_code() const -> int;
    auto to_json() const -> nlohmann::json;
};

auto select_items(const std::string & filter) -> std::vector<const SuiteItem *>;
auto run_suite(const SuiteOptions & options) -> SuiteReport;

/// Value of ALTCYCLES_CACHE_DIR, if set and non-empty.
auto default_cache_dir() -> std::optional<std::filesystem::path>;

} // namespace altcycles
