#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfaulhaber/verdict.hpp"

namespace qfaulhaber {

struct VerifyCase {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    bool overall() const;
    double total_seconds() const;
};

/// Sweep bounds for a verification suite; any field left negative takes the
/// suite's documented default.
struct SuiteRanges {
    int m_max = -1;
    int n_max = -1;
    int k_max = -1;
    int dim_max = -1;
    std::uint64_t budget = 1'000'000;
};

const std::vector<std::string>& suite_names();

/// Runs one of the suites eq2, lemma1, inverse, lgv, table1, props, or all.
/// Throws Error for an unknown suite name.
VerifyReport run_suite(const std::string& name, const SuiteRanges& ranges = {});

}  // namespace qfaulhaber
