#include "oracles.hpp"

#include "punctual/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace punctual;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "punctual");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

// m_1 for e = 2 spelled out: u b_11, v b_11, b_12, b_21, b_22 (b_21 reads u).
const char* kM1 = R"({"algebra": {"kind": "SmoothRam", "e": 2, "f": 1, "N": 4},
  "payload": {"ideal": {"generators": [[["u","0"],["0","0"]], [["v","0"],["0","0"]],
    [["0","1"],["0","0"]], [["0","0"],["u","0"]], [["0","0"],["0","1"]]]}}})";

const char* kChainMM = R"({"algebra": {"kind": "SmoothRam", "e": 2, "f": 1, "N": 6},
  "payload": {"chain": [{"generators": ["u", "v"]}, {"generators": ["u", "v"]}]}})";

} // namespace

TEST(Cli, ColengthOfMaximalIdeal) {
  const CliRun r = run({"colength"}, kM1);
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["operation"], "colength");
  EXPECT_EQ(j["result"]["colength"], 1);

  auto alg = Algebra::make(AlgebraSpec::smooth_ram(2, 1, 4));
  const LeftIdeal expected = close_left_ideal(maximal_ideal(alg, 1));
  EXPECT_EQ(ideal_from_json(alg, j["witness"]["ideal"]), expected);
}

TEST(Cli, ChecksAgreeWithBruteForce) {
  auto alg = Algebra::make(AlgebraSpec::smooth_ram(2, 1, 4));
  const LeftIdeal m1 = close_left_ideal(maximal_ideal(alg, 1));
  const CliRun two = run({"check-two-sided"}, kM1);
  const CliRun dc = run({"check-dual-containment"}, kM1);
  ASSERT_EQ(two.code, 0);
  ASSERT_EQ(dc.code, 0);
  EXPECT_EQ(two.json()["result"]["two_sided"].get<bool>(), oracle::brute_two_sided(m1));
  EXPECT_EQ(dc.json()["result"]["dual_containment"].get<bool>(), oracle::brute_dual_containment(m1));
  const Json escape = dc.json()["witness"]["escape"];
  ASSERT_FALSE(escape.is_null());
  EXPECT_FALSE(m1.contains(element_from_json(*alg, escape)));
}

TEST(Cli, DeformChainOfMaximalIdeals) {
  const CliRun r = run({"deform", "--verify"}, kChainMM);
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json result = r.json()["result"];
  EXPECT_EQ(result["colength"], 4);
  EXPECT_EQ(result["dual_containment_before"], true);
  EXPECT_EQ(result["dual_containment_after"], false);
  EXPECT_EQ(result["branch"], "all-equal");
  EXPECT_EQ(result["family_samples"].size(), 12u);

  auto alg = Algebra::make(AlgebraSpec::smooth_ram(2, 1, 6));
  const LeftIdeal after = ideal_from_json(alg, result["after"]);
  EXPECT_EQ(after.colength(), 4);
  EXPECT_FALSE(oracle::brute_dual_containment(after));
  for (const auto& s : result["family_samples"]) EXPECT_EQ(s["colength"], 4);
}

TEST(Cli, ComposeDecomposeRoundTrip) {
  const CliRun composed = run({"compose-chain"}, kChainMM);
  ASSERT_EQ(composed.code, 0) << composed.out;
  Json job = Json::parse(kChainMM);
  job["payload"] = Json{{"ideal", composed.json()["result"]["ideal"]}};
  const CliRun decomposed = run({"decompose-chain"}, job.dump());
  ASSERT_EQ(decomposed.code, 0) << decomposed.out;
  const Json chain = decomposed.json()["result"]["chain"];
  ASSERT_EQ(chain.size(), 2u);
  for (const auto& j : chain) EXPECT_EQ(j["colength"], 1);
  EXPECT_EQ(decomposed.json()["result"]["colength_sum"], 2);
}

TEST(Cli, CertificatesReverifyAndAreByteStable) {
  const std::string probe = R"({"algebra": {"kind": "SingularRam", "e": 2, "f": 2, "N": 2}, "payload": {"l": 1}})";
  const std::string simple = R"({"algebra": {"kind": "SmoothRam", "e": 3, "f": 1, "N": 2}})";
  const std::vector<std::pair<std::string, std::string>> jobs = {
      {"colength", kM1},           {"check-two-sided", kM1}, {"check-dual-containment", kM1},
      {"compose-chain", kChainMM}, {"deform", kChainMM},     {"probe-divisibility", probe},
      {"find-simple-quotients", simple}};
  for (const auto& [command, input] : jobs) {
    const CliRun a = run({command}, input);
    const CliRun b = run({command}, input);
    ASSERT_EQ(a.code, 0) << command << ": " << a.out;
    EXPECT_EQ(a.out, b.out) << command;
    const CliRun v = run({"verify-certificate"}, a.out);
    EXPECT_EQ(v.code, 0) << command << ": " << v.out;
    EXPECT_EQ(v.json()["result"]["verified"], true);
  }
}

TEST(Cli, DivisibilityAndSimpleCounts) {
  const CliRun probe = run({"probe-divisibility"},
                        R"({"algebra": {"kind": "SingularRam", "e": 2, "f": 2, "N": 2}, "payload": {"l": 1}})");
  ASSERT_EQ(probe.code, 0) << probe.out;
  EXPECT_EQ(probe.json()["result"]["exists"], false);
  EXPECT_TRUE(probe.json()["witness"]["ideal"].is_null());

  const CliRun simple = run({"find-simple-quotients"}, R"({"algebra": {"kind": "SmoothRam", "e": 3, "f": 1, "N": 2}})");
  ASSERT_EQ(simple.code, 0);
  EXPECT_EQ(simple.json()["result"]["count"], 3);
}

TEST(Cli, TamperedCertificateIsRejected) {
  const CliRun r = run({"deform"}, kChainMM);
  ASSERT_EQ(r.code, 0);
  Json cert = r.json();
  Json& basis = cert["result"]["after"]["basis"];
  basis.erase(basis.begin());
  const CliRun v = run({"verify-certificate"}, cert.dump());
  EXPECT_EQ(v.code, 2);
  EXPECT_EQ(v.json()["error"]["code"], "CertificateMismatch");
  EXPECT_EQ(v.json()["error"]["offending"].get<std::string>().rfind("/result/after/basis", 0), 0u);

  Json rehashed = r.json();
  rehashed["result"]["input"]["payload"]["family_points"] = 3;
  const CliRun h = run({"verify-certificate"}, rehashed.dump());
  EXPECT_EQ(h.code, 2);
  EXPECT_EQ(h.json()["error"]["offending"], "/input_hash");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"colength"}, "{not json").code, 1);
  EXPECT_EQ(run({"frobnicate"}, kM1).code, 1);
  EXPECT_EQ(run({"colength"}, R"({"algebra": {"kind": "SmoothRam", "e": 2, "N": 4}, "payload": {}})").code, 1);
  EXPECT_EQ(run({"colength", "--bogus"}, kM1).code, 1);

  const CliRun spec = run({"check-dual-containment"},
                       R"({"algebra": {"kind": "SingularRam", "e": 2, "N": 3},
                           "payload": {"ideal": {"generators": ["u"]}}})");
  EXPECT_EQ(spec.code, 2);
  EXPECT_EQ(spec.json()["error"]["code"], "SpecMismatch");

  const CliRun unsat = run({"deform"}, R"({"algebra": {"kind": "SmoothRam", "e": 2, "N": 4},
                                       "payload": {"ideal": {"generators": ["u"]}}})");
  EXPECT_EQ(unsat.code, 2);
  EXPECT_EQ(unsat.json()["error"]["code"], "UnsaturatedInput");

  const CliRun bound = run({"find-simple-quotients", "--max-dim", "10"},
                        R"({"algebra": {"kind": "SmoothRam", "e": 3, "N": 3}})");
  EXPECT_EQ(bound.code, 2);
  EXPECT_EQ(bound.json()["error"]["code"], "DimensionBound");
}

TEST(Cli, TruncationOverride) {
  const CliRun r = run({"colength", "--truncation", "5"}, kM1);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["result"]["input"]["algebra"]["N"], 5);
  EXPECT_EQ(r.json()["result"]["colength"], 1);
}

TEST(Cli, SelftestQuick) {
  const CliRun r = run({"selftest", "quick"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json result = r.json()["result"];
  EXPECT_EQ(result["passed"], true);
  EXPECT_EQ(result["criteria"].size(), 8u);
}
