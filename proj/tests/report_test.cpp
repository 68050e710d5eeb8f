#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.hpp"

using radcrit::RunOptions;
using radcrit::VerificationReport;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("radcrit_report_" + name);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args, const std::filesystem::path& out) {
  std::string cmd = std::string(RADCRIT_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST(Info, Examples) {
  auto s5 = radcrit::run_info("S(5)");
  EXPECT_EQ(s5.exit_code, 0);
  EXPECT_EQ(s5.group->order, "120");
  ASSERT_TRUE(s5.classes);
  EXPECT_EQ(s5.classes->size(), 7u);
  EXPECT_EQ(radcrit::run_info("C(1)").group->order, "1");
  auto sz = radcrit::run_info("file:" + testutil::fixture("sz8.json"));
  EXPECT_EQ(sz.group->order, "29120");
  EXPECT_EQ(sz.group->degree, 65u);
}

TEST(Info, Errors) {
  EXPECT_EQ(radcrit::run_info("Q(3)").exit_code, radcrit::kExitUsage);
  RunOptions small;
  small.element_cap = 100;
  EXPECT_EQ(radcrit::run_info("S(6)", small).exit_code, radcrit::kExitBudget);
}

TEST(Verify, Examples) {
  auto two = radcrit::run_verify("two", "direct(C(5),A(5))");
  EXPECT_EQ(two.exit_code, 0) << two.message;
  ASSERT_TRUE(two.oracle_comparison);
  EXPECT_TRUE(two.oracle_comparison->equal);
  bool saw_member = false, saw_witness = false;
  for (const auto& v : two.per_element_results) {
    ASSERT_TRUE(v.oracle_in_radical);
    EXPECT_EQ(v.in_radical_claimed, *v.oracle_in_radical);
    saw_member = saw_member || v.in_radical_claimed;
    saw_witness = saw_witness || v.witness.has_value();
  }
  EXPECT_TRUE(saw_member);
  EXPECT_TRUE(saw_witness);

  auto bs = radcrit::run_verify("bs", "S(4)");
  EXPECT_EQ(bs.exit_code, 0);
  EXPECT_EQ(bs.oracle_comparison->criterion_order, "4");
  EXPECT_EQ(bs.oracle_comparison->oracle_order, "4");

  auto pairs = radcrit::run_verify("pairs", "A(5)");
  EXPECT_EQ(pairs.exit_code, 0);
  ASSERT_TRUE(pairs.verdict_comparison);
  EXPECT_FALSE(pairs.verdict_comparison->criterion_solvable);
  EXPECT_TRUE(pairs.verdict_comparison->witness_pair);
  EXPECT_EQ(pairs.verdict_comparison->witness_order, "60");

  EXPECT_EQ(radcrit::run_verify("thompson", "D(6)").exit_code, 0);
  EXPECT_EQ(radcrit::run_verify("four", "S(4)").exit_code, 0);
}

TEST(Verify, BudgetAndUsageCodes) {
  RunOptions tight;
  tight.budget = 10;
  EXPECT_EQ(radcrit::run_verify("four", "S(5)", tight).exit_code, radcrit::kExitBudget);
  EXPECT_EQ(radcrit::run_verify("five", "S(5)").exit_code, radcrit::kExitUsage);
  EXPECT_EQ(radcrit::run_verify("bs", "S(").exit_code, radcrit::kExitUsage);
}

TEST(Verify, RandomizedModeReportsOnlyFalsifications) {
  RunOptions o;
  o.mode = radcrit::SearchMode::Randomized;
  o.budget = 40;
  o.seed = 9;
  auto r = radcrit::run_verify("two", "direct(C(5),A(5))", o);
  EXPECT_EQ(r.exit_code, 0) << r.message;
  EXPECT_EQ(r.search_mode, "RANDOMIZED");
  for (const auto& v : r.per_element_results) EXPECT_FALSE(v.in_radical_claimed);
}

TEST(Sharpness, Command) {
  auto r = radcrit::run_sharpness(5);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.sharpness->triples_checked, 120u);
  EXPECT_EQ(radcrit::run_sharpness(4).exit_code, radcrit::kExitUsage);
}

TEST(Report, RoundTripsThroughJson) {
  for (auto report : {radcrit::run_verify("two", "direct(C(5),A(5))"), radcrit::run_verify("pairs", "A(5)"),
                      radcrit::run_info("S(4)"), radcrit::run_sharpness(6), radcrit::run_verify("bs", "S(3)")}) {
    std::string text = radcrit::serialize(report);
    auto back = radcrit::deserialize<VerificationReport>(text);
    EXPECT_EQ(back, report);
    EXPECT_EQ(radcrit::serialize(back), text);
  }
}

// Witnesses in a serialized report regenerate after re-parsing.
TEST(Report, SerializedWitnessesRegenerate) {
  auto report = radcrit::run_verify("four", "direct(C(5),A(5))");
  auto back = radcrit::deserialize<VerificationReport>(radcrit::serialize(report));
  std::size_t degree = back.group->degree;
  std::size_t checked = 0;
  for (const auto& v : back.per_element_results) {
    if (!v.witness) continue;
    radcrit::Witness w;
    for (const auto& c : v.witness->conjugators) w.conjugators.push_back(radcrit::parse_cycles(c, degree));
    w.generated_order = radcrit::Order(v.witness->generated_order);
    w.solvable = v.witness->solvable;
    w.nilpotent = v.witness->nilpotent;
    EXPECT_TRUE(radcrit::witness_regenerates(radcrit::parse_cycles(v.element, degree), w));
    EXPECT_FALSE(w.solvable);
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Suite, EmptyConfig) {
  auto entries = radcrit::parse_suite_config(R"j({"entries": []})j");
  auto suite = radcrit::run_suite(entries, {});
  EXPECT_EQ(suite.exit_code, 0);
  EXPECT_TRUE(suite.entries.empty());
}

TEST(Suite, FalseClaimedOrderFails) {
  auto fixture = temp_path("lying.json");
  std::ofstream(fixture) << R"j({"format_version": 1, "name": "S4", "degree": 4,
      "generators": ["(1,2)", "(1,2,3,4)"], "claimed_order": 100, "provenance": "negative test"})j";
  auto entries = radcrit::parse_suite_config(R"j({"entries": [{"spec": "S(3)", "command": "info"},
      {"spec": "file:)j" + fixture.string() + R"j(", "command": "bs"}]})j");
  auto suite = radcrit::run_suite(entries, {});
  EXPECT_NE(suite.exit_code, 0);
  EXPECT_FALSE(suite.passed);
  EXPECT_EQ(suite.entries[0].exit_code, 0);
  EXPECT_EQ(suite.entries[1].exit_code, radcrit::kExitUsage);
}

TEST(Suite, ThreadCountDoesNotChangeTheReport) {
  auto entries = radcrit::parse_suite_config(R"j({"entries": [
      {"spec": "direct(C(7),PSL2(7))", "command": "two"},
      {"spec": "S(4)", "command": "bs"},
      {"spec": "PSL2(7)", "command": "two", "flags": {"randomized": true, "budget": 30, "seed": 4}}]})j");
  RunOptions one, four;
  four.threads = 4;
  auto a = radcrit::strip_timing(radcrit::ordered_json(radcrit::run_suite(entries, one))).dump();
  auto b = radcrit::strip_timing(radcrit::ordered_json(radcrit::run_suite(entries, four))).dump();
  EXPECT_EQ(a, b);
}

TEST(Cli, ExitCodesAndOutput) {
  auto out = temp_path("cli_out.json");
  auto file_out = temp_path("cli_file.json");
  EXPECT_EQ(run_cli("info \"S(5)\" --out " + file_out.string(), out), 0);
  auto report = radcrit::deserialize<VerificationReport>(read_file(out));
  EXPECT_EQ(report.group->order, "120");
  EXPECT_EQ(read_file(out), read_file(file_out));

  EXPECT_EQ(run_cli("verify bs \"S(4)\"", out), 0);
  EXPECT_EQ(run_cli("verify two \"direct(C(5),A(5))\" --threads 2", out), 0);
  EXPECT_EQ(run_cli("verify pairs \"A(5)\"", out), 0);
  EXPECT_EQ(run_cli("sharpness 5", out), 0);
  EXPECT_EQ(run_cli("sharpness 4", out), radcrit::kExitUsage);
  EXPECT_EQ(run_cli("verify four \"S(5)\" --budget 10", out), radcrit::kExitBudget);
  EXPECT_EQ(run_cli("verify nope \"S(5)\"", out), radcrit::kExitUsage);
  EXPECT_EQ(run_cli("info \"S(\"", out), radcrit::kExitUsage);
  EXPECT_EQ(run_cli("verify two \"A(5)\" --randomized --exhaustive", out), radcrit::kExitUsage);
  EXPECT_EQ(run_cli("info \"file:" + testutil::fixture("sz8.json") + "\"", out), 0);
}
