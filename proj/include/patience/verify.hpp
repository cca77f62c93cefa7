#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace patience {

struct PropertyResult {
    std::string statement;
    bool passed = false;
    std::string detail;  // counterexample or summary
};

struct SuiteReport {
    std::string suite;
    std::string header;
    int n = 0;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

// Suites exhaust S_m for m <= n; the sweep suites accept n <= 10.
inline constexpr int kVerifySweepBound = 10;

// thm2.2, cor2.4, prop3.1, prop3.2, cor3.4, thm3.5, thm3.6, thm3.7, thm3.9,
// series.
const std::vector<std::string>& suite_names();

// Throws ParseError for an unknown suite and OracleBoundExceeded when n is
// beyond the suite's bound.
SuiteReport run_suite(std::string_view suite, int n);

// Header line, one "PASS"/"FAIL" line per property with any counterexample
// indented below it, and a closing verdict.
std::string format_report(const SuiteReport& report);

}  // namespace patience
