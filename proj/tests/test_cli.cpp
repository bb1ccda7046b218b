#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ramify/cli.hpp"
#include "ramify/report.hpp"

using namespace ramify;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.push_back("--format");
    args.push_back("json");
    const CliRun r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return Json::parse(r.out);
}

std::string temp_path(const std::string &name)
{
    return ::testing::TempDir() + "ramify_" + name;
}

std::string slurp(const std::string &path)
{
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(CliAnalyze, WildExample)
{
    const Json j = run_json({"analyze", "--field", "Fp:2", "--f", "t^-4", "--prec", "8"});
    EXPECT_EQ(j["schema"], "ramify/1");
    EXPECT_EQ(j["best_f"]["swan"], "1/1");
    EXPECT_EQ(j["classification"], "Wild");
    EXPECT_EQ(j["ideals"]["J_sigma"]["value"], "1/2");
    EXPECT_EQ(j["ideals"]["J_sigma"]["bound"], "closed");
    EXPECT_TRUE(j["pass"].get<bool>());
    for (const auto &v : j["verdicts"]) {
        EXPECT_TRUE(v["pass"].get<bool>()) << v["name"];
    }
}

TEST(CliAnalyze, FerociousExample)
{
    const Json j = run_json({"analyze", "--field", "Fp(u):2", "--f", "u*t^-2", "--prec", "8"});
    EXPECT_EQ(j["best_f"]["swan"], "2/1");
    EXPECT_EQ(j["classification"], "Ferocious");
    EXPECT_EQ(j["rsw"]["du"], "(1/u) + O(t^1)");
}

TEST(CliAnalyze, UnramifiedExample)
{
    const Json j = run_json({"analyze", "--field", "Fp:3", "--f", "1 + t", "--prec", "4"});
    EXPECT_EQ(j["best_f"]["swan"], "0/1");
    EXPECT_EQ(j["classification"], "Unramified");
    EXPECT_TRUE(j["rsw"].is_null());
}

TEST(CliAnalyze, TextReport)
{
    const CliRun r = run({"analyze", "--field", "Fp:3", "--f", "t^-2", "--samples", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("classification        Wild"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(CliExitCodes, InputErrors)
{
    EXPECT_EQ(run({"analyze", "--field", "Fp:2", "--f", "t^"}).code, kExitInvalidInput);
    EXPECT_EQ(run({"analyze", "--field", "Fp:4", "--f", "t^-1"}).code, kExitInvalidInput);
    EXPECT_EQ(run({"analyze", "--field", "Fp:2", "--f", "t^-1", "--prec", "0"}).code, kExitInvalidInput);
    EXPECT_EQ(run({"analyze", "--field", "Fp:2"}).code, kExitInvalidInput);
    EXPECT_EQ(run({"frobnicate"}).code, kExitInvalidInput);
    EXPECT_EQ(run({}).code, kExitInvalidInput);
    const CliRun bad = run({"tower", "--p", "2", "--n", "1", "--q", "4"});
    EXPECT_EQ(bad.code, kExitInvalidInput);
    EXPECT_NE(bad.err.find("n >= 3"), std::string::npos);
    EXPECT_TRUE(bad.out.empty());
}

TEST(CliExitCodes, InsufficientPrecision)
{
    const CliRun r = run({"analyze", "--field", "Fp:3", "--f", "t^-2 + t^-1", "--prec", "2"});
    EXPECT_EQ(r.code, kExitInsufficientPrecision);
    const Json j = run_json({"analyze", "--field", "Fp:3", "--f", "t^-2 + t^-1", "--prec", "2"},
                            kExitInsufficientPrecision);
    EXPECT_EQ(j["error"]["kind"], "InsufficientPrecision");
}

TEST(CliExitCodes, Help)
{
    const CliRun r = run({"--help"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST(CliTower, Examples)
{
    const Json a = run_json({"tower", "--p", "3", "--n", "2", "--q", "9", "--depth", "5"});
    EXPECT_EQ(a["cuts"]["H"]["value"], "3/2");
    EXPECT_EQ(a["cuts"]["H"]["bound"], "open");
    EXPECT_TRUE(a["step_identity"]["pass"].get<bool>());
    EXPECT_EQ(a["levels"].size(), 6U);

    const Json b = run_json({"tower", "--p", "2", "--n", "3", "--q", "4", "--depth", "5"});
    EXPECT_EQ(b["v0"], "1/1");
    EXPECT_FALSE(b["principality"]["best_f_exists"].get<bool>());
}

TEST(CliTower, ExplicitShiftConstantAndCsv)
{
    const std::string csv = temp_path("levels.csv");
    const Json j = run_json({"tower", "--p", "3", "--n", "2", "--q", "9", "--depth", "2", "--a", "w+1", "--csv", csv});
    EXPECT_EQ(j["input"]["a"], "w + 1");
    const std::string table = slurp(csv);
    EXPECT_EQ(table.rfind("level,n_i,a_i,v_x,v_y,neg_v_f\n", 0), 0U);
    EXPECT_NE(table.find("1,5,\"w + 2\",1/3,1/9,5/3"), std::string::npos) << table;
    std::remove(csv.c_str());
    EXPECT_EQ(run({"tower", "--p", "3", "--n", "2", "--q", "9", "--a", "2"}).code, kExitInvalidInput);
}

TEST(CliDeterminism, IdenticalJson)
{
    const std::vector<std::string> args = {"analyze", "--field", "Fp(u):3", "--f", "u*t^-3", "--samples", "10",
                                           "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> tower = {"tower", "--p", "5", "--n", "2", "--q", "25", "--format", "json"};
    EXPECT_EQ(run(tower).out, run(tower).out);
}

TEST(CliSelftest, SeedsGiveSameVerdicts)
{
    const Json a = run_json({"selftest", "--seed", "7"});
    const Json b = run_json({"selftest", "--seed", "8"});
    ASSERT_EQ(a["criteria"].size(), 12U);
    for (std::size_t i = 0; i < 12; ++i) {
        EXPECT_TRUE(a["criteria"][i]["pass"].get<bool>()) << a["criteria"][i]["detail"];
        EXPECT_EQ(a["criteria"][i]["pass"], b["criteria"][i]["pass"]);
    }
}

TEST(CliOutput, WritesToOutPath)
{
    const std::string path = temp_path("report.json");
    const CliRun r = run({"analyze", "--field", "Fp:2", "--f", "t^-1", "--samples", "4", "--format", "json", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(Json::parse(slurp(path))["classification"], "Wild");
    std::remove(path.c_str());
}

TEST(CliBatch, KeepsInputOrderAndWorstExitCode)
{
    const std::string path = temp_path("batch.txt");
    {
        std::ofstream f(path);
        f << "# comment\n"
          << "analyze --field Fp:2 --f \"t^-4\" --samples 4\n"
          << "\n"
          << "tower --p 2 --n 1 --q 4\n"
          << "tower --p 3 --n 2 --q 9 --depth 2\n"
          << "analyze --field Fp:3 --f \"t^-2 + t^-1\" --prec 2\n";
    }
    const CliRun r = run({"--batch", path, "--format", "json"});
    EXPECT_EQ(r.code, kExitInsufficientPrecision);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j["results"].size(), 4U);
    EXPECT_EQ(j["results"][0]["line"], 2);
    EXPECT_EQ(j["results"][0]["exit_code"], 0);
    EXPECT_EQ(j["results"][1]["exit_code"], kExitInvalidInput);
    EXPECT_EQ(j["results"][2]["report"]["command"], "tower");
    EXPECT_EQ(j["results"][3]["exit_code"], kExitInsufficientPrecision);
    EXPECT_EQ(run({"--batch", path, "analyze", "--field", "Fp:2", "--f", "t"}).code, kExitInvalidInput);
    std::remove(path.c_str());
}
