#ifndef RADCRIT_REPORT_HPP
#define RADCRIT_REPORT_HPP

// Verification commands and their JSON reports. The CLI is a thin wrapper over
// run_info / run_verify / run_sharpness / run_suite.
//
// Exit-code contract:
//   0  the predicted equality or equivalence holds on this group
//   2  a contradiction was detected (an implementation bug, never a counterexample)
//   3  an element cap or tuple budget was exceeded
//   4  usage, parse, or group-file error

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "radcrit/bsgs.hpp"
#include "radcrit/classes.hpp"
#include "radcrit/criteria.hpp"
#include "radcrit/error.hpp"
#include "radcrit/structure.hpp"
#include "radcrit/zoo.hpp"

namespace radcrit {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitContradiction = 2,
  kExitBudget = 3,
  kExitUsage = 4,
};

// ---------------------------------------------------------------------------
// Report documents

struct WitnessRecord {
  std::vector<std::string> conjugators;
  std::string generated_order;
  bool solvable = false;
  bool nilpotent = false;
  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct VerdictRecord {
  std::string element;
  bool in_radical_claimed = false;
  std::optional<WitnessRecord> witness;
  std::string search_mode;
  std::uint64_t tuples_checked = 0;
  std::optional<bool> oracle_in_radical;
  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

/// Criterion subgroup against oracle subgroup (bs, four, two).
struct OracleComparison {
  std::string oracle_order;
  std::string criterion_order;
  bool equal = false;
  friend bool operator==(const OracleComparison&, const OracleComparison&) = default;
};

/// Criterion verdict against is_solvable (pairs, thompson).
struct VerdictComparison {
  bool oracle_solvable = false;
  bool criterion_solvable = false;
  bool equal = false;
  std::optional<std::vector<std::string>> witness_pair;
  std::optional<std::string> witness_order;
  std::uint64_t pairs_checked = 0;
  friend bool operator==(const VerdictComparison&, const VerdictComparison&) = default;
};

struct ClassRecord {
  std::string representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct SharpnessRecord {
  unsigned n = 0;
  std::uint64_t triples_checked = 0;
  bool all_solvable = false;
  std::string max_generated_order;
  friend bool operator==(const SharpnessRecord&, const SharpnessRecord&) = default;
};

struct GroupRecord {
  std::string spec_text;
  std::size_t degree = 0;
  std::string order;
  friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

struct VerificationReport {
  std::string tool_version{kToolVersion};
  std::string command;
  std::optional<GroupRecord> group;
  std::vector<VerdictRecord> per_element_results;
  std::optional<OracleComparison> oracle_comparison;
  std::optional<VerdictComparison> verdict_comparison;
  std::optional<std::vector<ClassRecord>> classes;
  std::optional<SharpnessRecord> sharpness;
  std::string search_mode{"EXHAUSTIVE"};
  std::uint64_t rng_seed = 1;
  std::int64_t timing_ms = 0;
  int exit_code = kExitOk;
  std::string message;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SuiteReport {
  std::string tool_version{kToolVersion};
  std::vector<VerificationReport> entries;
  bool passed = true;
  int exit_code = kExitOk;
  std::int64_t timing_ms = 0;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

using ordered_json = nlohmann::ordered_json;

namespace detail {

template <class T>
void put_optional(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get_optional(const ordered_json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j[key].is_null())
    v = j[key].get<T>();
  else
    v.reset();
}

}  // namespace detail

inline void to_json(ordered_json& j, const WitnessRecord& w) {
  j = ordered_json{{"conjugators", w.conjugators},
                   {"generated_order", w.generated_order},
                   {"solvable", w.solvable},
                   {"nilpotent", w.nilpotent}};
}
inline void from_json(const ordered_json& j, WitnessRecord& w) {
  j.at("conjugators").get_to(w.conjugators);
  j.at("generated_order").get_to(w.generated_order);
  j.at("solvable").get_to(w.solvable);
  j.at("nilpotent").get_to(w.nilpotent);
}

inline void to_json(ordered_json& j, const VerdictRecord& v) {
  j = ordered_json{{"element", v.element}, {"in_radical_claimed", v.in_radical_claimed}};
  detail::put_optional(j, "witness", v.witness);
  j["search_mode"] = v.search_mode;
  j["tuples_checked"] = v.tuples_checked;
  detail::put_optional(j, "oracle_in_radical", v.oracle_in_radical);
}
inline void from_json(const ordered_json& j, VerdictRecord& v) {
  j.at("element").get_to(v.element);
  j.at("in_radical_claimed").get_to(v.in_radical_claimed);
  detail::get_optional(j, "witness", v.witness);
  j.at("search_mode").get_to(v.search_mode);
  j.at("tuples_checked").get_to(v.tuples_checked);
  detail::get_optional(j, "oracle_in_radical", v.oracle_in_radical);
}

inline void to_json(ordered_json& j, const OracleComparison& c) {
  j = ordered_json{{"oracle_order", c.oracle_order}, {"criterion_order", c.criterion_order}, {"equal", c.equal}};
}
inline void from_json(const ordered_json& j, OracleComparison& c) {
  j.at("oracle_order").get_to(c.oracle_order);
  j.at("criterion_order").get_to(c.criterion_order);
  j.at("equal").get_to(c.equal);
}

inline void to_json(ordered_json& j, const VerdictComparison& c) {
  j = ordered_json{{"oracle_solvable", c.oracle_solvable},
                   {"criterion_solvable", c.criterion_solvable},
                   {"equal", c.equal}};
  detail::put_optional(j, "witness_pair", c.witness_pair);
  detail::put_optional(j, "witness_order", c.witness_order);
  j["pairs_checked"] = c.pairs_checked;
}
inline void from_json(const ordered_json& j, VerdictComparison& c) {
  j.at("oracle_solvable").get_to(c.oracle_solvable);
  j.at("criterion_solvable").get_to(c.criterion_solvable);
  j.at("equal").get_to(c.equal);
  detail::get_optional(j, "witness_pair", c.witness_pair);
  detail::get_optional(j, "witness_order", c.witness_order);
  j.at("pairs_checked").get_to(c.pairs_checked);
}

inline void to_json(ordered_json& j, const ClassRecord& c) {
  j = ordered_json{{"representative", c.representative}, {"size", c.size}, {"element_order", c.element_order}};
}
inline void from_json(const ordered_json& j, ClassRecord& c) {
  j.at("representative").get_to(c.representative);
  j.at("size").get_to(c.size);
  j.at("element_order").get_to(c.element_order);
}

inline void to_json(ordered_json& j, const SharpnessRecord& s) {
  j = ordered_json{{"n", s.n},
                   {"triples_checked", s.triples_checked},
                   {"all_solvable", s.all_solvable},
                   {"max_generated_order", s.max_generated_order}};
}
inline void from_json(const ordered_json& j, SharpnessRecord& s) {
  j.at("n").get_to(s.n);
  j.at("triples_checked").get_to(s.triples_checked);
  j.at("all_solvable").get_to(s.all_solvable);
  j.at("max_generated_order").get_to(s.max_generated_order);
}

inline void to_json(ordered_json& j, const GroupRecord& g) {
  j = ordered_json{{"spec_text", g.spec_text}, {"degree", g.degree}, {"order", g.order}};
}
inline void from_json(const ordered_json& j, GroupRecord& g) {
  j.at("spec_text").get_to(g.spec_text);
  j.at("degree").get_to(g.degree);
  j.at("order").get_to(g.order);
}

inline void to_json(ordered_json& j, const VerificationReport& r) {
  j = ordered_json{{"tool_version", r.tool_version}, {"command", r.command}};
  detail::put_optional(j, "group", r.group);
  j["per_element_results"] = r.per_element_results;
  detail::put_optional(j, "oracle_comparison", r.oracle_comparison);
  detail::put_optional(j, "verdict_comparison", r.verdict_comparison);
  detail::put_optional(j, "classes", r.classes);
  detail::put_optional(j, "sharpness", r.sharpness);
  j["search_mode"] = r.search_mode;
  j["rng_seed"] = r.rng_seed;
  j["timing_ms"] = r.timing_ms;
  j["exit_code"] = r.exit_code;
  j["message"] = r.message;
}
inline void from_json(const ordered_json& j, VerificationReport& r) {
  j.at("tool_version").get_to(r.tool_version);
  j.at("command").get_to(r.command);
  detail::get_optional(j, "group", r.group);
  j.at("per_element_results").get_to(r.per_element_results);
  detail::get_optional(j, "oracle_comparison", r.oracle_comparison);
  detail::get_optional(j, "verdict_comparison", r.verdict_comparison);
  detail::get_optional(j, "classes", r.classes);
  detail::get_optional(j, "sharpness", r.sharpness);
  j.at("search_mode").get_to(r.search_mode);
  j.at("rng_seed").get_to(r.rng_seed);
  j.at("timing_ms").get_to(r.timing_ms);
  j.at("exit_code").get_to(r.exit_code);
  j.at("message").get_to(r.message);
}

inline void to_json(ordered_json& j, const SuiteReport& s) {
  j = ordered_json{{"tool_version", s.tool_version},
                   {"entries", s.entries},
                   {"passed", s.passed},
                   {"exit_code", s.exit_code},
                   {"timing_ms", s.timing_ms}};
}
inline void from_json(const ordered_json& j, SuiteReport& s) {
  j.at("tool_version").get_to(s.tool_version);
  j.at("entries").get_to(s.entries);
  j.at("passed").get_to(s.passed);
  j.at("exit_code").get_to(s.exit_code);
  j.at("timing_ms").get_to(s.timing_ms);
}

template <class Report>
std::string serialize(const Report& r) {
  return ordered_json(r).dump(2) + "\n";
}

template <class Report>
Report deserialize(std::string_view text) {
  return ordered_json::parse(text).get<Report>();
}

/// Removes every "timing_ms" field, leaving the parts of a report that must be
/// reproducible.
inline ordered_json strip_timing(ordered_json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Commands

struct RunOptions {
  SearchMode mode = SearchMode::Exhaustive;
  std::optional<std::uint64_t> budget;  // tuple budget (exhaustive) or samples (randomized)
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint64_t element_cap = kDefaultElementCap;
  std::filesystem::path base_dir;  // for relative file: specs

  CriteriaOptions criteria() const {
    CriteriaOptions o;
    o.mode = mode;
    o.seed = seed;
    o.threads = threads;
    if (budget) {
      o.tuple_budget = *budget;
      o.sample_budget = *budget;
    }
    return o;
  }
};

inline constexpr std::string_view kContradictionMessage =
    "theorem contradiction detected: this indicates an implementation bug, not a counterexample to the theorem";

namespace detail {

inline WitnessRecord record(const Witness& w) {
  WitnessRecord r;
  for (const auto& x : w.conjugators) r.conjugators.push_back(print_cycles(x));
  r.generated_order = w.generated_order.str();
  r.solvable = w.solvable;
  r.nilpotent = w.nilpotent;
  return r;
}

inline VerdictRecord record(const CriterionVerdict& v, std::optional<bool> oracle) {
  VerdictRecord r;
  r.element = print_cycles(v.element);
  r.in_radical_claimed = v.in_radical_claimed;
  if (v.witness) r.witness = record(*v.witness);
  r.search_mode = std::string(to_string(v.search_mode));
  r.tuples_checked = v.tuples_checked;
  r.oracle_in_radical = oracle;
  return r;
}

// A decided verdict that disagrees with oracle membership.
inline bool contradicts(const CriterionVerdict& v, bool oracle_member) {
  if (v.in_radical_claimed) return !oracle_member;
  if (v.witness) return oracle_member;
  return false;
}

struct Context {
  Bsgs group;
  std::vector<ConjugacyClass> classes;
};

inline Context load(std::string_view spec, const RunOptions& options, VerificationReport& report, bool need_classes) {
  Context ctx;
  ctx.group = Bsgs(construct(spec, options.base_dir));
  report.group = GroupRecord{std::string(spec), ctx.group.degree(), ctx.group.order().str()};
  if (need_classes) ctx.classes = conjugacy_classes(ctx.group, options.element_cap);
  return ctx;
}

template <class Body>
VerificationReport timed(std::string command, const RunOptions& options, Body body) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.command = std::move(command);
  report.search_mode = std::string(to_string(options.mode));
  report.rng_seed = options.seed;
  try {
    body(report);
  } catch (const BudgetExceeded& e) {
    report.exit_code = kExitBudget;
    report.message = std::string("budget exceeded: ") + e.what();
  } catch (const CapExceeded& e) {
    report.exit_code = kExitBudget;
    report.message = std::string("element cap exceeded: ") + e.what();
  } catch (const Error& e) {
    report.exit_code = kExitUsage;
    report.message = e.what();
  }
  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

// Radical criteria with an oracle counterpart (bs, four).
inline void compare_radicals(VerificationReport& report, const Context& ctx, const CriterionRun& run,
                             const RadicalResult& oracle, SearchMode mode) {
  std::set<Permutation> oracle_reps(oracle.member_class_reps.begin(), oracle.member_class_reps.end());
  bool contradiction = false;
  std::vector<Permutation> not_falsified;
  for (const auto& v : run.verdicts) {
    bool member = oracle_reps.contains(v.element);
    contradiction = contradiction || contradicts(v, member);
    if (!v.witness) not_falsified.push_back(v.element);
    report.per_element_results.push_back(record(v, member));
  }
  OracleComparison cmp;
  cmp.oracle_order = oracle.subgroup.order().str();
  if (mode == SearchMode::Exhaustive) {
    const Bsgs& crit = run.radical.subgroup;
    cmp.criterion_order = crit.order().str();
    cmp.equal = !contradiction && crit.order() == oracle.subgroup.order() && crit.contains_group(oracle.subgroup) &&
                oracle.subgroup.contains_group(crit);
  } else {
    // A falsifier can only bound the radical from above.
    cmp.criterion_order = normal_closure(ctx.group, not_falsified).order().str();
    cmp.equal = !contradiction;
  }
  report.oracle_comparison = cmp;
  if (!cmp.equal) {
    report.exit_code = kExitContradiction;
    report.message = std::string(kContradictionMessage);
  }
}

}  // namespace detail

inline VerificationReport run_info(std::string_view spec, const RunOptions& options = {}) {
  return detail::timed("info", options, [&](VerificationReport& report) {
    auto ctx = detail::load(spec, options, report, true);
    std::vector<ClassRecord> classes;
    for (const auto& c : ctx.classes)
      classes.push_back({print_cycles(c.representative), c.class_size(), c.element_order()});
    report.classes = std::move(classes);
    report.message = "order " + ctx.group.order().str() + ", " + std::to_string(ctx.classes.size()) + " classes";
  });
}

/// theorem: bs | four | two | pairs | thompson
inline VerificationReport run_verify(std::string_view theorem, std::string_view spec, const RunOptions& options = {}) {
  return detail::timed("verify " + std::string(theorem), options, [&](VerificationReport& report) {
    if (theorem != "bs" && theorem != "four" && theorem != "two" && theorem != "pairs" && theorem != "thompson")
      throw PreconditionError("unknown theorem \"" + std::string(theorem) + "\" (expected bs|four|two|pairs|thompson)");
    auto ctx = detail::load(spec, options, report, true);
    const CriteriaOptions crit = options.criteria();

    if (theorem == "bs") {
      auto run = baer_suzuki_set(ctx.group, ctx.classes, crit);
      auto oracle = fitting_oracle(ctx.group, ctx.classes, options.threads);
      detail::compare_radicals(report, ctx, run, oracle, options.mode);
    } else if (theorem == "four") {
      auto run = four_conjugate_radical(ctx.group, ctx.classes, crit);
      auto oracle = solvable_radical_oracle(ctx.group, ctx.classes, options.threads);
      detail::compare_radicals(report, ctx, run, oracle, options.mode);
    } else if (theorem == "two") {
      auto verdicts = two_conjugate_all(ctx.group, ctx.classes, crit);
      auto oracle = solvable_radical_oracle(ctx.group, ctx.classes, options.threads);
      bool agree = true;
      std::vector<Permutation> oracle_members, claimed;
      for (const auto& v : verdicts) {
        bool member = oracle.subgroup.contains(v.element);
        if (member) oracle_members.push_back(v.element);
        if (v.in_radical_claimed) claimed.push_back(v.element);
        bool ok = options.mode == SearchMode::Exhaustive ? v.in_radical_claimed == member
                                                         : !detail::contradicts(v, member);
        agree = agree && ok;
        report.per_element_results.push_back(detail::record(v, member));
      }
      OracleComparison cmp;
      cmp.oracle_order = normal_closure(ctx.group, oracle_members).order().str();
      cmp.criterion_order = normal_closure(ctx.group, claimed).order().str();
      cmp.equal = agree;
      report.oracle_comparison = cmp;
      if (!agree) {
        report.exit_code = kExitContradiction;
        report.message = std::string(kContradictionMessage);
      }
    } else {
      VerdictComparison cmp;
      cmp.oracle_solvable = is_solvable(ctx.group);
      if (theorem == "pairs") {
        auto v = class_pair_solvability(ctx.group, ctx.classes, options.threads);
        cmp.criterion_solvable = v.all_solvable;
        cmp.pairs_checked = v.pairs_checked;
        if (v.witness) {
          cmp.witness_pair = std::vector<std::string>{print_cycles(*v.element),
                                                      print_cycles(conjugate(*v.element, v.witness->conjugators[0]))};
          cmp.witness_order = v.witness->generated_order.str();
          CriterionVerdict cv;
          cv.element = *v.element;
          cv.witness = v.witness;
          cv.tuples_checked = v.pairs_checked;
          report.per_element_results.push_back(detail::record(cv, std::nullopt));
        }
      } else {
        auto v = thompson_test(ctx.group, ctx.classes, options.element_cap, options.threads);
        cmp.criterion_solvable = v.all_solvable;
        cmp.pairs_checked = v.pairs_checked;
        if (v.pair) {
          cmp.witness_pair = std::vector<std::string>{print_cycles(v.pair->first), print_cycles(v.pair->second)};
          cmp.witness_order = v.generated_order.str();
        }
      }
      cmp.equal = cmp.oracle_solvable == cmp.criterion_solvable;
      report.verdict_comparison = cmp;
      if (!cmp.equal) {
        report.exit_code = kExitContradiction;
        report.message = std::string(kContradictionMessage);
      }
    }
    if (report.exit_code == kExitOk) report.message = "holds";
  });
}

inline VerificationReport run_sharpness(unsigned n, const RunOptions& options = {}) {
  return detail::timed("sharpness", options, [&](VerificationReport& report) {
    auto s = transposition_triple_sharpness(n);
    report.sharpness = SharpnessRecord{s.n, s.triples_checked, s.all_solvable, s.max_generated_order.str()};
    if (!s.all_solvable) {
      report.exit_code = kExitContradiction;
      report.message = std::string(kContradictionMessage);
    } else {
      report.message = "all " + std::to_string(s.triples_checked) + " transposition triples generate solvable subgroups";
    }
  });
}

// ---------------------------------------------------------------------------
// Suites

/// One suite entry: {"spec": ..., "command": info|bs|four|two|pairs|thompson|sharpness, "flags": {...}}.
/// Flags: randomized (bool), budget, seed, element_cap, n (sharpness).
struct SuiteEntry {
  std::string spec;
  std::string command;
  ordered_json flags = ordered_json::object();
};

inline std::vector<SuiteEntry> parse_suite_config(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("suite config is not valid JSON: ") + e.what());
  }
  std::vector<SuiteEntry> entries;
  try {
    for (const auto& e : doc.at("entries")) {
      SuiteEntry s;
      s.spec = e.value("spec", "");
      s.command = e.at("command").get<std::string>();
      if (e.contains("flags")) s.flags = e["flags"];
      entries.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("suite config: ") + e.what());
  }
  return entries;
}

inline VerificationReport run_entry(const SuiteEntry& entry, const RunOptions& base) {
  RunOptions o = base;
  try {
    if (entry.flags.value("randomized", false)) o.mode = SearchMode::Randomized;
    if (entry.flags.contains("budget")) o.budget = entry.flags["budget"].get<std::uint64_t>();
    if (entry.flags.contains("seed")) o.seed = entry.flags["seed"].get<std::uint64_t>();
    if (entry.flags.contains("element_cap")) o.element_cap = entry.flags["element_cap"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    VerificationReport r;
    r.command = entry.command;
    r.exit_code = kExitUsage;
    r.message = std::string("bad flags: ") + e.what();
    return r;
  }
  if (entry.command == "info") return run_info(entry.spec, o);
  if (entry.command == "sharpness") {
    unsigned n = entry.flags.contains("n") ? entry.flags["n"].get<unsigned>()
                                           : static_cast<unsigned>(std::strtoul(entry.spec.c_str(), nullptr, 10));
    return run_sharpness(n, o);
  }
  return run_verify(entry.command, entry.spec, o);
}

inline SuiteReport run_suite(const std::vector<SuiteEntry>& entries, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport suite;
  for (const auto& e : entries) {
    suite.entries.push_back(run_entry(e, options));
    int code = suite.entries.back().exit_code;
    if (code != kExitOk) {
      suite.passed = false;
      // Contradictions outrank budget problems, which outrank usage errors.
      auto rank = [](int c) { return c == kExitContradiction ? 3 : c == kExitBudget ? 2 : c == kExitOk ? 0 : 1; };
      if (rank(code) > rank(suite.exit_code)) suite.exit_code = code;
    }
  }
  suite.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return suite;
}

inline SuiteReport run_suite_file(const std::filesystem::path& config_path, RunOptions options) {
  std::ifstream in(config_path);
  if (!in) throw ParseError("cannot open suite config " + config_path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto entries = parse_suite_config(buffer.str());
  if (options.base_dir.empty()) options.base_dir = config_path.parent_path();
  return run_suite(entries, options);
}

}  // namespace radcrit

#endif  // RADCRIT_REPORT_HPP
