#include "cli/cli.hpp"
#include "cli/envelope.hpp"

#include <gtest/gtest.h>
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace binform::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "binform");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = invoke(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return nlohmann::json::parse(r.out);
}

TEST(Cli, CoeffsJsonEnvelope) {
  const auto j = invoke_json({"coeffs", "4", "--form", "sn"});
  EXPECT_EQ(j["command"], "coeffs");
  EXPECT_EQ(j["results"]["coefficients"], nlohmann::json({"0", "1", "0", "-1", "0"}));
  EXPECT_EQ(j["results"]["ell"], "2");
  EXPECT_TRUE(j.contains("provenance"));
  EXPECT_TRUE(j.contains("parameters"));
}

TEST(Cli, CoeffsWritesFormDocument) {
  const auto path = (std::filesystem::temp_directory_path() / "binform_cli_s5.json").string();
  ASSERT_EQ(invoke({"coeffs", "5", "--form", "sn", "--output", path}).code, kExitOk);
  const auto j = invoke_json({"disc", "--file", path});
  EXPECT_EQ(j["results"]["degree"], 5);
  const auto area = invoke_json({"area", "--file", path, "--method", "polar"});
  EXPECT_NEAR(area["results"]["polar"]["value"].get<double>(), 4.55444308796217206, 1e-9);
  std::filesystem::remove(path);
}

TEST(Cli, AreaAllMethodsAgree) {
  const auto j = invoke_json({"area", "--n", "3"});
  EXPECT_NEAR(j["results"]["closed"].get<double>(), 18.3594484446863145, 1e-12);
  EXPECT_LT(j["results"]["max_pairwise_rel_deviation"].get<double>(), 1e-9);
  EXPECT_TRUE(j["results"]["polar"]["converged"].get<bool>());
}

TEST(Cli, DiscExact) {
  EXPECT_EQ(invoke_json({"disc", "--n", "3", "--form", "sn"})["results"]["discriminant"], "108");
  EXPECT_EQ(invoke_json({"disc", "--n", "4"})["results"]["discriminant"], "1/16");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"area", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"thue", "--n", "2", "--h", "10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"thue", "--n", "3", "--h", "100,10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"coeffs", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"coeffs", "3", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"check", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"disc", "--file", "/nonexistent/form.json"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"thue", "--help"}).code, kExitOk);
}

TEST(Cli, CheckPassesAndIsDeterministic) {
  const auto a = invoke({"check", "--suite", "all", "--seed", "42", "--format", "json"});
  const auto b = invoke({"check", "--suite", "all", "--seed", "42", "--format", "json"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["results"]["pass"].get<bool>());
  EXPECT_EQ(j["results"]["suites"].size(), 7u);
}

TEST(Cli, CheckReportsFailureWithExitOne) {
  // No suite can hold a relative tolerance below the unit roundoff.
  const auto r = invoke({"check", "--suite", "sin-product", "--tol", "1e-18"});
  EXPECT_EQ(r.code, kExitCheckFailed) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(invoke({"check", "--suite", "gcd", "--tol", "1e-18"}).code, kExitOk);
  EXPECT_EQ(invoke({"check", "--tol", "-1"}).code, kExitUsage);
}

TEST(Cli, ThueCsvHeaderAndRows) {
  const auto r = invoke({"thue", "--n", "3", "--h", "2,10,100"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "n,h,count,predicted,ratio,mahler_stat,flags");
  std::vector<std::string> counts;
  while (std::getline(lines, row)) {
    std::istringstream cells(row);
    std::string n, h, count;
    std::getline(cells, n, ',');
    std::getline(cells, h, ',');
    std::getline(cells, count, ',');
    counts.push_back(count);
  }
  EXPECT_EQ(counts, (std::vector<std::string>{"10", "24", "120"}));
  EXPECT_NE(r.err.find("excluded"), std::string::npos);
}

TEST(Cli, ThueJsonCarriesNote) {
  const auto j = invoke_json({"thue", "--n", "4", "--h", "5,50"});
  EXPECT_EQ(j["results"]["records"][0]["count"], 0);
  EXPECT_FALSE(j["notes"].empty());
}

TEST(Cli, InvariantTable) {
  const auto j = invoke_json({"invariant", "--n-min", "3", "--n-max", "6"});
  const auto& rows = j["results"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(rows[0]["invariant"].get<double>(), 15.8997487525690496, 1e-8);
  for (const auto& r : rows) EXPECT_LE(r["invariant"].get<double>(), 15.9 + 1e-6);
}

TEST(Cli, EnvironmentTolerance) {
  ::setenv("BINFORM_TOL", "1e-6", 1);
  const auto j = invoke_json({"area", "--n", "5", "--method", "polar"});
  ::unsetenv("BINFORM_TOL");
  EXPECT_DOUBLE_EQ(j["parameters"]["tol"].get<double>(), 1e-6);
  ::setenv("BINFORM_TOL", "garbage", 1);
  EXPECT_EQ(invoke({"area", "--n", "5"}).code, kExitUsage);
  ::unsetenv("BINFORM_TOL");
}

TEST(Envelope, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 18.359448444686315, 1e-300, -2.5e17}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Envelope, TextFlattensNestedKeys) {
  OutputEnvelope env;
  env.command = "demo";
  env.results["outer"]["inner"] = 3;
  std::ostringstream out;
  write_text(out, env);
  EXPECT_NE(out.str().find("outer.inner: 3"), std::string::npos);
}

}  // namespace
}  // namespace binform::cli
