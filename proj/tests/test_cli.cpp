#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "lame3trf");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = lame3trf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

std::vector<std::string> split(const std::string &s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string f; std::getline(in, f, ',');) {
        v.push_back(f);
    }
    return v;
}

// value of `column` in data row `row` of a CSV table
std::string cell(const std::string &csv, const std::string &column, std::size_t row = 0)
{
    const auto ls = lines(csv);
    const auto head = split(ls.at(0));
    const auto pos = std::find(head.begin(), head.end(), column);
    if (pos == head.end()) {
        return "<missing>";
    }
    return split(ls.at(row + 1)).at(static_cast<std::size_t>(pos - head.begin()));
}

std::filesystem::path temp_file(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("lame3trf_cli_" + name);
}

} // namespace

TEST(Cli, HeunMap)
{
    const auto r = run({"heun-map", "--rho", "0.5", "--h", "2", "--alpha", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(cell(r.out, "gamma"), "0.5");
    EXPECT_EQ(cell(r.out, "delta"), "0.5");
    EXPECT_EQ(cell(r.out, "epsilon"), "0.5");
    EXPECT_EQ(cell(r.out, "a"), "4");
    EXPECT_EQ(cell(r.out, "q"), "-2");
}

TEST(Cli, EvalSeriesAtOrigin)
{
    const auto r = run({"eval-series", "--xi", "0", "--lambda", "0", "--c0", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(cell(r.out, "value"), "1");
}

TEST(Cli, EvalSnNeedsZ)
{
    EXPECT_EQ(run({"eval-sn"}).code, 2);
    const auto r = run({"eval-sn", "--z", "0.5", "--rho", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(cell(r.out, "sn")), std::sin(0.5), 1e-15);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"eval-series", "--bogus"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"eval-series", "--rho", "1.5"}).code, 2);
    EXPECT_EQ(run({"eval-series", "--lambda", "0.3"}).code, 2);
    EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
    EXPECT_EQ(run({"verify", "gf-order0", "--s", "0.3,0.2", "--K", "2"}).code, 2);
    EXPECT_EQ(run({"verify", "gf-order0", "--s", "0.3,1.2"}).code, 2);
    EXPECT_EQ(run({"eval-series", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"eval-series", "--xi", "0.1", "--z", "0.2"}).code, 2);
    EXPECT_EQ(run({"sweep", "--axis", "bogus=1,2"}).code, 2);
    EXPECT_EQ(run({"sweep", "--axis", "h=1:2"}).code, 2);
    EXPECT_EQ(run({"eval-series", "--config", "/nonexistent/config.json"}).code, 2);
}

TEST(Cli, VerifyLemma1DefaultGrid)
{
    const auto r = run({"verify", "lemma1"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ForcedToleranceFails)
{
    const auto r = run({"verify", "gf-order0", "--tol", "1e-30"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyGfOrder0Passes)
{
    const auto r = run({"verify", "gf-order0"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("PASS"), std::string::npos);
    EXPECT_EQ(cell(r.out, "pass"), "true");
}

TEST(Cli, VerifyJsonReport)
{
    const auto r = run({"verify", "residue", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 100u);
    for (const char *key : {"command", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "gap", "tail_estimate", "pass"}) {
        EXPECT_TRUE(j[0].contains(key)) << key;
    }
    EXPECT_EQ(j[0]["command"], "verify residue");
}

TEST(Cli, VerifyOdeAndKernels)
{
    EXPECT_EQ(run({"verify", "ode"}).code, 0);
    EXPECT_EQ(run({"verify", "ode", "--lambda", "0.5", "--alpha", "7", "--h", "0"}).code, 0);
    EXPECT_EQ(run({"verify", "kernels"}).code, 0);
}

TEST(Cli, SweepSinglePointMatchesEvalSeries)
{
    const auto a = run({"eval-series", "--xi", "0.2", "--h", "1.5"});
    const auto b = run({"sweep", "--target", "eval-series", "--axis", "xi=0.2", "--h", "1.5"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SweepOrdersRows)
{
    const auto r = run({"sweep", "--axis", "h=2,0,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(lines(r.out).size(), 4u);
    EXPECT_EQ(cell(r.out, "h", 0), "0");
    EXPECT_EQ(cell(r.out, "h", 1), "1");
    EXPECT_EQ(cell(r.out, "h", 2), "2");

    const auto g = run({"sweep", "--axis", "rho=0.4:0.6:2", "--axis", "alpha=1,2"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_EQ(cell(g.out, "rho", 0), "0.40000000000000002");
    EXPECT_EQ(cell(g.out, "alpha", 0), "1");
    EXPECT_EQ(cell(g.out, "alpha", 1), "2");
    EXPECT_EQ(cell(g.out, "rho", 2), "0.59999999999999998");
}

TEST(Cli, SweepGfOrder0Gaps)
{
    const auto r = run({"sweep", "--target", "gf-order0", "--axis", "s0=0.1,0.2,0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_LT(std::stod(cell(r.out, "gap", k)), 1e-8);
    }
}

TEST(Cli, ConfigFilePrecedence)
{
    const auto path = temp_file("config.json");
    {
        std::ofstream f(path);
        f << R"({"rho": 0.6, "h": 2.5, "xi": 0.05})";
    }
    const auto r = run({"eval-series", "--config", path.string(), "--rho", "0.7"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(cell(r.out, "rho"), "0.69999999999999996");
    EXPECT_EQ(cell(r.out, "h"), "2.5");
    EXPECT_EQ(cell(r.out, "xi"), "0.050000000000000003");
    {
        std::ofstream f(path);
        f << R"({"unknown_key": 1})";
    }
    EXPECT_EQ(run({"eval-series", "--config", path.string()}).code, 2);
    std::filesystem::remove(path);
}

TEST(Cli, DeterministicOutputFiles)
{
    for (const std::string fmt : {"csv", "json"}) {
        const auto p1 = temp_file("a." + fmt);
        const auto p2 = temp_file("b." + fmt);
        for (const auto &p : {p1, p2}) {
            const auto r = run({"verify", "gf-order1", "--nq", "16", "--M", "128", "--format", fmt, "--out", p.string()});
            EXPECT_NE(r.code, 2) << r.err;
            EXPECT_TRUE(r.out.empty());
        }
        std::ifstream a(p1), b(p2);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        EXPECT_FALSE(sa.str().empty());
        EXPECT_EQ(sa.str(), sb.str());
        std::filesystem::remove(p1);
        std::filesystem::remove(p2);
    }
}
