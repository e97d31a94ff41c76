#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aho2d/quadratic.hpp"
#include "cli/cli.hpp"

namespace aho {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool has_line_starting(const std::string& text, const std::string& prefix) {
  for (const auto& l : lines(text)) {
    if (l.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

TEST(Cli, Classify) {
  EXPECT_NE(run({"classify", "--a", "1", "--b", "1", "--c", "2"}).out.find("Case 2, group C4v"), std::string::npos);
  EXPECT_NE(run({"classify", "--a", "1", "--b", "2", "--c", "1"}).out.find("Case 3, group C2v"), std::string::npos);
  EXPECT_NE(run({"classify", "--a", "1", "--b", "1", "--c", "0"}).out.find("Case 0 (separable)"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"classify", "--a", "1", "--b", "1", "--c", "2", "--format", "json"}).out);
  EXPECT_EQ(j["group"], "C4v");
  EXPECT_EQ(j["irreps"].size(), 5U);
}

TEST(Cli, FirstOrderTable) {
  EXPECT_TRUE(has_line_starting(run({"pt1", "--a", "1", "--b", "1", "--c", "1", "--nmax", "3"}).out, "2E,8,20,"));
  EXPECT_TRUE(has_line_starting(run({"pt1", "--a", "1", "--b", "2", "--c", "1", "--nmax", "2"}).out, "2A1,6,(73-2*sqrt(85))/4,"));
  const auto out = run({"pt1", "--a", "0", "--b", "0", "--c", "1", "--nmax", "2"}).out;
  for (const char* row : {"1A1,2,1/2,", "1E,4,3/2,", "1B1,6,3/2,", "2A1,6,7/2,", "1B2,6,9/2,"}) {
    EXPECT_TRUE(has_line_starting(out, row)) << row;
  }
}

TEST(Cli, JsonRoundTripsExactValues) {
  const auto r = run({"pt1", "--a", "1", "--b", "2", "--c", "3/7", "--nmax", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  int surds = 0;
  for (const auto& level : doc["levels"]) {
    if (level["E1"].is_null()) continue;
    const auto& e1 = level["E1"];
    const QuadraticNumber back(parse_rational(e1["p"].get<std::string>()), parse_rational(e1["q"].get<std::string>()),
                               parse_rational(e1["r"].get<std::string>()));
    EXPECT_EQ(back.to_string(), e1["exact"].get<std::string>());
    surds += !back.is_rational();
  }
  EXPECT_GT(surds, 0);
}

TEST(Cli, MomentSeries) {
  const auto r = run({"mpt", "--state", "1A1", "--a", "0", "--b", "0", "--c", "1", "--order", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line_starting(r.out, "1A1,1,1/2,"));
  const auto e = run({"mpt", "--state", "2E", "--a", "0", "--b", "0", "--c", "1", "--order", "1"});
  EXPECT_TRUE(has_line_starting(e.out, "2E,1,(11-2*sqrt(7))/2,"));
  const auto sum = run({"mpt", "--state", "1A1", "--order", "6", "--lambda", "0.01"});
  EXPECT_TRUE(has_line_starting(sum.out, "1A1,sum,lambda=1/100,2.00496"));
}

TEST(Cli, CoupledBeyondFirstOrderIsRefused) {
  const auto r = run({"mpt", "--state", "2E", "--order", "5"});
  EXPECT_EQ(r.code, cli::kScopeRefusal);
  EXPECT_NE(r.err.find("coupled pair beyond first order: unsupported"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--a", "1.2.3"}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--a", "0.1e"}).code, cli::kUsage);
  EXPECT_EQ(run({"pt1", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"mpt", "--state", "1Q"}).code, cli::kUsage);
  EXPECT_EQ(run({"rr", "--irrep", "E", "--a", "1", "--b", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"sweep", "--step", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, UnboundedPotentialIsRefused) {
  EXPECT_EQ(run({"rr", "--a", "1", "--b", "1", "--c", "-2", "--krylov", "4"}).code, cli::kScopeRefusal);
  EXPECT_EQ(run({"rr", "--lambda", "-1", "--krylov", "4"}).code, cli::kScopeRefusal);
}

TEST(Cli, RayleighRitzTable) {
  const auto r = run({"rr", "--irrep", "E", "--partner", "oe", "--lambda", "1/2", "--krylov", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "lambda,irrep,index,energy,convergence");
  EXPECT_EQ(rows.at(1).rfind("0.5,E_oe,1,", 0), 0U);
}

TEST(Cli, PrecisionFromEnvironment) {
  ::setenv("AHO2D_PRECISION_BITS", "100", 1);
  EXPECT_EQ(run({"rr", "--krylov", "4"}).code, cli::kUsage);
  ::setenv("AHO2D_PRECISION_BITS", "256", 1);
  const auto r = run({"rr", "--krylov", "4", "--irrep", "A1", "--format", "json"});
  ::unsetenv("AHO2D_PRECISION_BITS");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(nlohmann::json::parse(r.out)[0]["bits"].get<int>(), 256);
}

TEST(Cli, SweepIsDeterministic) {
  const std::vector<std::string> base{"sweep", "--to", "0.1", "--step", "0.05", "--nmax", "2", "--krylov", "12"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto two = base;
  two.insert(two.end(), {"--threads", "3"});
  const auto a = run(one);
  const auto b = run(two);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto rows = lines(a.out);
  EXPECT_EQ(rows.front(), "lambda,label,irrep,energy,witwit_label");
  // λ = 0, 0.05, 0.1 with 1A1, 1E (twice), 1B1, 2A1, 1B2
  EXPECT_EQ(rows.size(), 1U + 3 * 6);
  EXPECT_EQ(rows.at(1), "0,1A1,A1,2e+00,\"(0,0,e)\"");
  EXPECT_EQ(rows.at(2), "0,1E,E_eo,4e+00,\"(0,1,mixed)\"");
  EXPECT_EQ(rows.at(3), "0,1E,E_oe,4e+00,\"(1,0,mixed)\"");
}

TEST(Cli, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "aho2d_cli_test.csv";
  std::filesystem::remove(path);
  const auto r = run({"pt1", "--nmax", "1", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "label,E0,E1,E1_float,N,irrep,characteristic");
  std::filesystem::remove(path);
}

TEST(Cli, DecimalText) {
  EXPECT_EQ(cli::decimal_text(Rational(1, 20)), "0.05");
  EXPECT_EQ(cli::decimal_text(Rational(3)), "3");
  EXPECT_EQ(cli::decimal_text(Rational(-7, 4)), "-1.75");
  EXPECT_EQ(cli::decimal_text(Rational(1, 3)), "1/3");
}

}  // namespace
}  // namespace aho
