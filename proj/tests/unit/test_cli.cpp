#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "zetashuffle_cli/cli.hpp"

namespace zetashuffle::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "zetashuffle");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ShufflePlain) {
  const Result r = call({"shuffle", "xy", "xy"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2*xyxy + 4*x^2y^2\n");
}

TEST(Cli, ShuffleMethodsAgree) {
  const std::string expected = call({"shuffle", "x^2y", "xyy"}).out;
  for (const char* m : {"recursive", "permutation", "general", "auto"}) {
    EXPECT_EQ(call({"shuffle", "x^2y", "xyy", "--method", m}).out, expected) << m;
  }
}

TEST(Cli, ShuffleLatexAndJson) {
  EXPECT_EQ(call({"shuffle", "xy", "xy", "--format", "latex"}).out, "2\\zeta(2,2)+4\\zeta(3,1)\n");
  EXPECT_EQ(call({"shuffle", "xy", "xy", "--format", "latex", "--words"}).out, "2xyxy+4x^{2}y^{2}\n");
  const auto doc = nlohmann::json::parse(call({"shuffle", "x", "y", "--format", "json"}).out);
  EXPECT_EQ(doc["terms"].size(), 2U);
}

TEST(Cli, ShuffleOutsideH1) {
  EXPECT_EQ(call({"shuffle", "xy", "yx"}).code, kExitOk);
  EXPECT_EQ(call({"shuffle", "xy", "yx", "--method", "general"}).code, kExitDomain);
}

TEST(Cli, ParseErrors) {
  const Result r = call({"shuffle", "xz", "y"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
  EXPECT_EQ(call({"shuffle", "xy"}).code, kExitUsage);
  EXPECT_EQ(call({"shuffle", "xy", "xy", "--format", "html"}).code, kExitUsage);
  EXPECT_EQ(call({"bogus"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "nope"}).code, kExitUsage);
}

TEST(Cli, VerifyPlain) {
  const Result r = call({"verify", "res11", "--max-weight", "6", "--threads", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("res11: "), std::string::npos);
  EXPECT_NE(r.out.find("0 failed (max weight 6)"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, VerifyJsonIsDeterministic) {
  const std::vector<std::string> args = {"verify", "all", "--max-weight", "6", "--format", "json"};
  const Result a = call(args);
  const Result b = call(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["suites"].size(), 9U);
  EXPECT_FALSE(doc["suites"][0].contains("elapsed_ms"));
  EXPECT_TRUE(nlohmann::json::parse(call({"verify", "res11", "--max-weight", "5", "--format", "json", "--timing"}).out)
                  ["suites"][0]
                      .contains("elapsed_ms"));
}

TEST(Cli, WeightCap) {
  ::unsetenv("MZV_MAX_WEIGHT");
  EXPECT_EQ(weight_cap(), kDefaultWeightCap);
  EXPECT_EQ(call({"verify", "res11", "--max-weight", "11"}).code, kExitUsage);
  ::setenv("MZV_MAX_WEIGHT", "11", 1);
  EXPECT_EQ(weight_cap(), 11);
  EXPECT_EQ(call({"verify", "res11", "--max-weight", "11", "--threads", "1"}).code, kExitOk);
  ::setenv("MZV_MAX_WEIGHT", "junk", 1);
  EXPECT_EQ(weight_cap(), kDefaultWeightCap);
  ::unsetenv("MZV_MAX_WEIGHT");
}

TEST(Cli, Zeta) {
  const Result r = call({"zeta", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("zeta(2) = 1.6448", 0), 0U) << r.out;
  EXPECT_NE(r.out.find("(M=20000)"), std::string::npos);
  const auto doc = nlohmann::json::parse(call({"zeta", "3,1", "--terms", "1000", "--format", "json"}).out);
  EXPECT_EQ(doc["index"], "3,1");
  EXPECT_EQ(doc["terms"], 1000);
  EXPECT_EQ(call({"zeta", "1,2"}).code, kExitDomain);
  EXPECT_EQ(call({"zeta", "2", "--terms", "3"}).code, kExitDomain);
  EXPECT_EQ(call({"zeta", "2,,1"}).code, kExitUsage);
}

TEST(Cli, Identity) {
  const Result r = call({"identity", "xy", "xy"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(call({"identity", "y", "xy"}).code, kExitDomain);
  // A zero tolerance cannot absorb the truncation error.
  EXPECT_EQ(call({"identity", "xy", "xy", "--tol", "0", "--terms", "100"}).code, kExitVerifyFailed);
  const auto doc = nlohmann::json::parse(call({"identity", "xy", "x^2y", "--format", "json"}).out);
  EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(Cli, Equiv) {
  const Result r = call({"equiv", "A", "--max-param", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "pair A: 16 checked, 0 failed\nPASS\n");
  const auto doc = nlohmann::json::parse(call({"equiv", "B", "--max-param", "1", "--format", "json"}).out);
  EXPECT_EQ(doc["checked"], 1);
  EXPECT_FALSE(doc.contains("elapsed_ms"));
  EXPECT_EQ(call({"equiv", "C"}).code, kExitUsage);
}

}  // namespace
}  // namespace zetashuffle::cli
