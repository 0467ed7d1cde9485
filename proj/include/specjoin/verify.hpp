#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specjoin/power_graph.hpp"

namespace specjoin::verify {

enum class Status { pass, fail, warn };

std::string_view to_string(Status s);

/// One machine-readable result line: `STATUS suite name key=value ...`.
struct CaseResult {
    std::string suite;
    std::string name;
    Status status = Status::pass;
    std::vector<std::pair<std::string, std::string>> fields;
};

struct SuiteOptions {
    power::u64 max_n = 300;
    double tol = kCompareTolerance;
    int jobs = 0;
    power::u64 oracle_max = power::kDefaultOracleMax;
    std::size_t random_cases = 200;
    std::size_t join_cases = 50;
    std::uint64_t seed = 20240917;
};

/// Random joined unions and joins: structural against oracle, trace, range and
/// the extreme-eigenvalue claim for joins (WARN when it does not hold).
std::vector<CaseResult> joined_union_suite(const SuiteOptions& options);
/// P(Z_n) for 2 <= n <= max_n, plus the per-family printed-quantity checks.
std::vector<CaseResult> power_suite(const SuiteOptions& options);
/// Named families over parameter grids, engine against oracle and printed
/// lists against oracle (WARN on disagreement).
std::vector<CaseResult> families_suite(const SuiteOptions& options);

std::string format(const CaseResult& r);
bool any_fail(const std::vector<CaseResult>& results);

/// Parameter grid used by the families suite.
std::vector<std::string> family_grid();

/// Extreme eigenvalues of a join against its 2x2 quotient.
struct JoinExtremes {
    double min_value;
    double max_value;
    double min_gap;  // distance from min_value to the nearest quotient eigenvalue
    double max_gap;
};

JoinExtremes join_extremes(const JoinedUnionSpec& join, const Spectrum& full);

}  // namespace specjoin::verify
