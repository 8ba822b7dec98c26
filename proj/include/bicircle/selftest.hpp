#pragma once

#include <string>
#include <vector>

namespace bicircle {

struct CriterionResult {
    int index;
    std::string name;
    bool passed;
    std::string detail;
};

/// The full acceptance suite; every check is exact (tolerance zero).
std::vector<CriterionResult> run_acceptance();

} // namespace bicircle
