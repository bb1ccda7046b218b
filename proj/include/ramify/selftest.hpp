#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramify/tower.hpp"

namespace ramify {

// The fixed extension grid used by the acceptance criteria: residue field
// spec and f.
struct GridCase {
    std::string field;
    std::string f;
};

const std::vector<GridCase> &dvr_grid();
// (p, n, q) for the defect tower.
const std::vector<TowerSpec> &tower_grid();

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    int cases = 0;
    std::string detail;
};

struct SelftestOptions {
    std::uint64_t seed = 20240229;
};

// Criteria are numbered 1..12; any library error inside a criterion is
// reported as a failure with its message.
CriterionResult run_criterion(int id, const SelftestOptions &options);
std::vector<CriterionResult> run_selftest(const SelftestOptions &options);

// Minimum of max(0, -v(f + h^p - h)) over every h with coefficients in F_p
// supported on t^-1 .. t^-depth. Exhaustive, so only for tiny p and depth.
Value brute_force_swan(const LaurentSeries &f, int depth);

} // namespace ramify
