#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace isola {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::string detail;
};

struct VerifyOptions {
    int threads = 1;
    int precision_bits = 256;
    std::uint64_t seed = 20240607;
    int property_cases = 200;
};

// Acceptance criteria 1..11; each result includes its runtime budget in the verdict.
CriterionResult run_criterion(int id, const VerifyOptions& opt);
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// One line per criterion: "[PASS] 3 name (1.23 s / 5 s): detail".
std::string format_result(const CriterionResult& r);

// Property suites used by criterion 11; each returns the number of failing cases.
struct PropertyReport {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

PropertyReport property_parity_grading(int cases, std::uint64_t seed);
PropertyReport property_exact_numeric(int cases, std::uint64_t seed, int precision_bits);
PropertyReport property_phase_reality(int cases, std::uint64_t seed, int precision_bits);
PropertyReport property_isola_symmetry(int cases, std::uint64_t seed, int precision_bits);

}  // namespace isola
