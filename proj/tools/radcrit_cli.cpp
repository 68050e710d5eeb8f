// radcrit: command-line front end for the radical criteria toolkit.
//
//   radcrit info SPEC
//   radcrit verify {bs|four|two|pairs|thompson} SPEC
//   radcrit sharpness N
//   radcrit suite CONFIG
//
// The report is printed to stdout (and written to --out); progress goes to stderr.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "radcrit/report.hpp"

namespace {

template <class Report>
int emit(const Report& report, const std::string& out_path) {
  std::string text = radcrit::serialize(report);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "radcrit: cannot write " << out_path << "\n";
      return radcrit::kExitUsage;
    }
    out << text;
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugate-generation criteria for the solvable and nilpotent radicals of permutation groups"};
  app.require_subcommand(1);

  bool exhaustive = false;
  bool randomized = false;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint64_t element_cap = radcrit::kDefaultElementCap;
  std::string out_path;

  auto add_flags = [&](CLI::App* cmd) {
    auto* ex = cmd->add_flag("--exhaustive", exhaustive, "Exhaustive search (default)");
    cmd->add_flag("--randomized", randomized, "Randomized falsification only")->excludes(ex);
    cmd->add_option("--budget", budget, "Tuple budget (exhaustive) or sample count (randomized)");
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    cmd->add_option("--element-cap", element_cap, "Largest group order enumerated in full");
    cmd->add_option("--out", out_path, "Also write the report to this path");
  };

  std::string spec;
  auto* info = app.add_subcommand("info", "Degree, order and conjugacy classes of a group");
  info->add_option("spec", spec, "Group spec, e.g. S(5), direct(C(5),A(5)), file:sz8.json")->required();
  add_flags(info);

  std::string theorem;
  auto* verify = app.add_subcommand("verify", "Check a criterion against its oracle");
  verify->add_option("theorem", theorem, "bs | four | two | pairs | thompson")
      ->required()
      ->check(CLI::IsMember({"bs", "four", "two", "pairs", "thompson"}));
  verify->add_option("spec", spec, "Group spec")->required();
  add_flags(verify);

  unsigned n = 0;
  auto* sharp = app.add_subcommand("sharpness", "Transposition triples of S(n) generate solvable subgroups");
  sharp->add_option("n", n, "Degree, 5..8")->required();
  add_flags(sharp);

  std::string config;
  auto* suite = app.add_subcommand("suite", "Run every entry of a suite config");
  suite->add_option("config", config, "Suite config (JSON)")->required();
  add_flags(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : radcrit::kExitUsage;
  }

  radcrit::RunOptions options;
  options.mode = randomized ? radcrit::SearchMode::Randomized : radcrit::SearchMode::Exhaustive;
  if (budget > 0) options.budget = budget;
  options.seed = seed;
  options.threads = threads;
  options.element_cap = element_cap;

  if (*info) return emit(radcrit::run_info(spec, options), out_path);
  if (*verify) {
    std::cerr << "radcrit: verifying " << theorem << " on " << spec << "\n";
    return emit(radcrit::run_verify(theorem, spec, options), out_path);
  }
  if (*sharp) {
    if (n < 5 || n > 8) {
      std::cerr << "radcrit: sharpness needs 5 <= n <= 8\n";
      return radcrit::kExitUsage;
    }
    return emit(radcrit::run_sharpness(n, options), out_path);
  }
  try {
    return emit(radcrit::run_suite_file(config, options), out_path);
  } catch (const radcrit::Error& e) {
    std::cerr << "radcrit: " << e.what() << "\n";
    return radcrit::kExitUsage;
  }
}
