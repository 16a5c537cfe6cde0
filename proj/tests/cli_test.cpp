#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hopf/cli.hpp"

using namespace hopf;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json report(const Outcome& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, VerifyPareigisPasses) {
  const Outcome r = run({"verify-pareigis", "--s=-1", "--window=6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = report(r);
  EXPECT_EQ(j.at("version"), "0.1.0");
  EXPECT_EQ(j.at("config").at("command"), "verify-pareigis");
  ASSERT_EQ(j.at("results").size(), 5u);
  std::vector<std::string> names;
  for (const auto& x : j.at("results")) {
    EXPECT_EQ(x.at("verdict"), "Equal");
    EXPECT_TRUE(x.at("millis").is_null());
    names.push_back(x.at("name"));
  }
  EXPECT_EQ(names, (std::vector<std::string>{"antipode", "comultiplication", "counit", "multiplication", "unit"}));
}

TEST(Cli, CommandFlagEqualsPositional) {
  const Outcome a = run({"verify-pareigis", "--s=1"});
  const Outcome b = run({"--command", "verify-pareigis", "--s=1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"roundtrip", "--command", "verify-pareigis"}).code, 2);
}

TEST(Cli, CarrierCheckRejectsEvenDegree) {
  const Outcome r = run({"carrier-check", "--carrier", R"({"rank":1,"summands":[{"degree":[0],"order":0}]})"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("sign +1 at even degree"), std::string::npos);
  const auto j = report(r);
  EXPECT_EQ(j.at("results").at(0).at("verdict"), "Reject");
}

TEST(Cli, CarrierFile) {
  const std::string path = ::testing::TempDir() + "carrier.json";
  {
    std::ofstream f(path);
    f << R"({"rank":1,"summands":[{"degree":[1],"order":0},{"degree":[3],"order":2}]})";
  }
  const Outcome r = run({"carrier-check", "--carrier-file", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("across degrees"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, RoundtripIsDeterministic) {
  const Outcome a = run({"roundtrip", "--trials=20", "--seed=42"});
  const Outcome b = run({"roundtrip", "--trials=20", "--seed=42"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const Outcome c = run({"roundtrip", "--trials=20", "--seed=43"});
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(report(a).at("results").size(), 5u);
}

TEST(Cli, TimingFillsMillis) {
  const auto j = report(run({"verify-pareigis", "--timing", "--window=2"}));
  for (const auto& x : j.at("results")) EXPECT_TRUE(x.at("millis").is_number());
}

TEST(Cli, CheckAxiomsAcrossRings) {
  for (const std::string ring : {"pareigis", "pareigis-plus", "laurent", "laurent:2", "diffhopf"}) {
    const Outcome r = run({"check-axioms", "--ring", ring, "--window=2", "--s=1"});
    EXPECT_EQ(r.code, 0) << ring << r.out << r.err;
  }
  const Outcome even = run({"check-axioms", "--ring", "diffhopf", "--s=2"});
  EXPECT_EQ(even.code, 1);
}

TEST(Cli, BuildSemidirectAndBicomplex) {
  EXPECT_EQ(run({"build-semidirect", "--s=3", "--window=3"}).code, 0);
  for (const std::string kappa : {"-1", "1"}) {
    const Outcome r = run({"bicomplex-check", "--kappa", kappa, "--trials=10"});
    EXPECT_EQ(r.code, 0) << r.out;
  }
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"verify-pareigis", "--window=0"}).code, 2);
  EXPECT_EQ(run({"roundtrip", "--trials=0"}).code, 2);
  EXPECT_EQ(run({"verify-pareigis", "--s=3"}).code, 2);
  EXPECT_EQ(run({"check-axioms", "--ring", "octonions"}).code, 2);
  EXPECT_EQ(run({"check-axioms", "--ring", "laurent:x"}).code, 2);
  EXPECT_EQ(run({"verify-pareigis", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify-pareigis", "--kappa", "2"}).code, 2);
  EXPECT_EQ(run({"verify-pareigis", "--unknown"}).code, 2);
  EXPECT_EQ(run({"verify-pareigis", "--window", "abc"}).code, 2);
  EXPECT_EQ(run({"carrier-check"}).code, 2);
  EXPECT_EQ(run({"carrier-check", "--carrier", "{"}).code, 2);
  EXPECT_EQ(run({"carrier-check", "--carrier", R"({"rank":1})"}).code, 2);
  EXPECT_EQ(run({"carrier-check", "--carrier-file", "/nonexistent/c.json"}).code, 2);
  EXPECT_EQ(run({"verify-pareigis", "--output", "/nonexistent/dir/out.json"}).code, 2);
}

TEST(Cli, TextFormat) {
  const Outcome r = run({"verify-pareigis", "--format", "text", "--window=2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("hopfcheck 0.1.0 verify-pareigis\n", 0), 0u);
  EXPECT_NE(r.out.find("multiplication: Equal"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}
