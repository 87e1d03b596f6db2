#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nullify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::vector<int> only; // empty runs all twelve
};

int criterion_count();
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opt,
                                            const std::function<void(const CriterionResult &)> &each = {});
// "PASS  3  title (tolerance 0): detail [1.2 s]"
std::string format_line(const CriterionResult &r, bool timing = true);

} // namespace nullify
