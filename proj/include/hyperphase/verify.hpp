#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperphase {

struct CheckResult {
    std::string name;
    bool passed = false;
    double error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

// Numeric self-checks: every preset's reflection pair against its formula,
// model round trips, and the line-coloring constancy properties.
std::vector<CheckResult> run_verification();

// One row per check; returns true when all passed.
bool print_verification(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace hyperphase
