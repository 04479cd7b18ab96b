#pragma once

// The end-to-end acceptance criteria, shared by the acceptance test binary
// and `cpconv selftest`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cpconv {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Criterion reports evidence and asserts nothing beyond producing it.
    bool evidence_only = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    /// Shrinks every range so the whole suite finishes well under a minute.
    bool quick = false;
    unsigned jobs = 1;
    std::uint64_t seed = 20240611;
};

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace cpconv
