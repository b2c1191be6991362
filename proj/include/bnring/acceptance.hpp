#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bnring {

/// Quick shrinks every range so the whole suite runs in seconds; Full uses
/// the published acceptance ranges and time limits.
enum class Budget { Quick, Full };

struct CriterionResult {
    std::string id;        // "A1" .. "A10"
    std::string title;
    bool passed = false;
    std::uint64_t checks = 0;
    std::string detail;    // first counterexample, or a summary line
    double seconds = 0.0;
    double limit_seconds = 0.0;
};

std::vector<std::string> criterion_ids();

/// Runs one criterion.  Exceptions thrown by the library count as failures.
CriterionResult run_criterion(const std::string& id, Budget budget);

std::vector<CriterionResult> run_acceptance(Budget budget);

/// "PASS A3  Euler characteristic ... (1234 checks, 0.41 s)".  Without
/// timing the line is reproducible byte for byte.
std::string format_result(const CriterionResult& r, bool timing = true);

} // namespace bnring
