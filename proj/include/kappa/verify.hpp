#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kappa {

struct VerifyOptions {
    int max_m = 0;           // 0 = per-suite default
    std::uint64_t seed = 12345;
    int workers = 0;         // 0 = KAPPA_WORKERS env or hardware default
    std::ostream* stream = nullptr;  // per-case progress lines
};

struct CaseResult {
    std::string id;
    bool passed = false;
    std::string detail;      // residual or message when failed
    double ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> results;  // sorted by case id
    double total_ms = 0.0;

    int failures() const;
};

std::vector<std::string> suite_names();  // excludes "all"

/// Runs one suite (or "all") with a worker pool; results are assembled in
/// case-id order regardless of scheduling.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace kappa
