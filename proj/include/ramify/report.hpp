#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramify/invariants.hpp"
#include "ramify/selftest.hpp"
#include "ramify/tower.hpp"

namespace ramify {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "ramify/1";

// What the analyze command was asked, echoed into the report.
struct AnalyzeInput {
    std::string field;
    std::string f;
    std::int64_t precision = 0;
    std::int64_t work_precision = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};

// Values render as "num/den", cuts as {"value", "bound"}.
Json to_json(const Value &v);
Json to_json(const Cut &c);

Json analyze_json(const AnalyzeInput &in, const InvariantReport &r);
std::string analyze_text(const AnalyzeInput &in, const InvariantReport &r);

Json tower_json(const TowerAnalysis &t, int trials, std::uint64_t seed);
std::string tower_text(const TowerAnalysis &t);
std::string tower_csv(const std::vector<TowerLevel> &levels);

Json selftest_json(const std::vector<CriterionResult> &results, std::uint64_t seed);
std::string selftest_text(const std::vector<CriterionResult> &results);

} // namespace ramify
