#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtrig/series.hpp"

namespace gtrig::acceptance {

inline constexpr int kCriterionCount = 13;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Config {
    std::uint64_t seed = kDefaultSeed;
    double sum_tol = 1e-6;  // closed form vs brute-force oracle
    long oracle_terms = kDefaultOracleTerms;
};

struct Check {
    std::string name;
    double measured;
    double threshold;
    bool passed;
    bool at_least = false;  // passes when measured > threshold
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0: no runtime bound
    bool runtime_ok = true;
    std::string error;  // set when the criterion threw

    bool passed() const;
    /// The check with the largest measured/threshold ratio.
    const Check* worst() const;
};

CriterionResult run_criterion(int id, const Config& config = {});
std::vector<CriterionResult> run_all(const Config& config = {});

}  // namespace gtrig::acceptance
