#include <gtest/gtest.h>

#include "test_util.hpp"

using radcrit::Bsgs;
using radcrit::Order;
using radcrit::Permutation;
using testutil::group;
using testutil::P;

namespace {

bool same_subgroup(const Bsgs& a, const Bsgs& b) {
  return a.order() == b.order() && a.contains_group(b) && b.contains_group(a);
}

// Number of distinct primes dividing n.
int distinct_primes(Order n) {
  int count = 0;
  for (Order d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ++count;
      while (n % d == 0) n /= d;
    }
  }
  return count + (n > 1 ? 1 : 0);
}

}  // namespace

TEST(DerivedSubgroup, Examples) {
  EXPECT_TRUE(same_subgroup(radcrit::derived_subgroup(group("S(5)")), group("A(5)")));
  EXPECT_TRUE(radcrit::derived_subgroup(group("C(12)")).is_trivial());
  Bsgs a5 = group("A(5)");
  EXPECT_EQ(radcrit::derived_subgroup(a5).order(), a5.order());
}

TEST(DerivedSubgroup, MatchesBruteForceCommutatorClosure) {
  for (const auto& spec : {"S(4)", "D(6)", "A(4)", "direct(C(4),S(3))", "S(5)"}) {
    auto gens = radcrit::construct(spec);
    auto brute = oracle::derived(gens.degree(), testutil::brute_elements(gens));
    Bsgs d = radcrit::derived_subgroup(Bsgs(gens));
    EXPECT_EQ(d.order(), brute.size()) << spec;
    for (const auto& e : brute) EXPECT_TRUE(d.contains(Permutation::from_zero_based({e.begin(), e.end()})));
  }
}

TEST(Solvability, Examples) {
  EXPECT_TRUE(radcrit::is_solvable(group("S(4)")));
  EXPECT_FALSE(radcrit::is_solvable(group("A(5)")));
  EXPECT_FALSE(radcrit::is_solvable(group("file:" + testutil::fixture("sz8.json"))));
  EXPECT_TRUE(radcrit::is_solvable(Bsgs(radcrit::GeneratorSet(3))));
}

TEST(Solvability, SeriesEvidence) {
  auto s4 = radcrit::derived_series(group("S(4)"));
  EXPECT_TRUE(s4.terminated);
  EXPECT_FALSE(s4.stabilized);
  std::vector<Order> orders;
  for (const auto& t : s4.terms) orders.push_back(t.order());
  EXPECT_EQ(orders, (std::vector<Order>{24, 12, 4, 1}));

  auto s5 = radcrit::derived_series(group("S(5)"));
  EXPECT_TRUE(s5.stabilized);
  EXPECT_FALSE(s5.terminated);
  EXPECT_EQ(s5.last().order(), 60);  // perfect core A5
}

TEST(Solvability, SeriesStrictlyDecreasesAndIsContained) {
  for (const auto& spec : {"S(4)", "D(6)", "direct(C(5),A(5))", "PSL2(7)", "direct(C(4),S(3))", "A(6)"}) {
    auto series = radcrit::derived_series(group(spec));
    EXPECT_NE(series.terminated, series.stabilized);
    for (std::size_t i = 1; i < series.terms.size(); ++i) {
      EXPECT_LT(series.terms[i].order(), series.terms[i - 1].order()) << spec;
      EXPECT_TRUE(series.terms[i - 1].contains_group(series.terms[i])) << spec;
    }
    // length bound
    Order two_pow = 1;
    for (std::size_t i = 1; i < series.terms.size(); ++i) two_pow *= 2;
    EXPECT_LE(two_pow, series.terms.front().order()) << spec;
  }
}

TEST(Solvability, AgreesWithBruteForceAndBurnside) {
  for (const auto& spec : {"S(3)", "S(4)", "A(4)", "A(5)", "D(4)", "D(6)", "C(12)", "PSL2(5)", "PSL2(7)",
                           "direct(C(4),S(3))", "direct(C(4),C(9))", "direct(C(5),A(5))"}) {
    auto gens = radcrit::construct(spec);
    Bsgs g(gens);
    bool solvable = radcrit::is_solvable(g);
    EXPECT_EQ(solvable, oracle::solvable(gens.degree(), testutil::brute_elements(gens))) << spec;
    if (distinct_primes(g.order()) <= 2) EXPECT_TRUE(solvable) << spec << " has order p^a q^b";
  }
}

TEST(Nilpotency, Examples) {
  EXPECT_TRUE(radcrit::is_nilpotent(group("D(4)")));
  EXPECT_FALSE(radcrit::is_nilpotent(group("S(3)")));
  EXPECT_TRUE(radcrit::is_nilpotent(group("direct(C(4),C(9))")));
  EXPECT_FALSE(radcrit::is_nilpotent(group("D(6)")));
  EXPECT_TRUE(radcrit::is_nilpotent(Bsgs(radcrit::GeneratorSet(2))));
}

TEST(Nilpotency, AgreesWithBruteForce) {
  for (const auto& spec : {"S(3)", "S(4)", "A(4)", "D(4)", "D(6)", "C(12)", "direct(C(4),S(3))",
                           "direct(C(4),C(9))", "direct(D(4),C(3))"}) {
    auto gens = radcrit::construct(spec);
    EXPECT_EQ(radcrit::is_nilpotent(Bsgs(gens)), oracle::nilpotent(gens.degree(), testutil::brute_elements(gens)))
        << spec;
  }
}

TEST(RadicalOracles, SolvableRadical) {
  auto radical = [](const std::string& spec) {
    Bsgs g = group(spec);
    return radcrit::solvable_radical_oracle(g, radcrit::conjugacy_classes(g));
  };
  auto s4 = radical("S(4)");
  EXPECT_EQ(s4.subgroup.order(), 24);
  EXPECT_EQ(s4.kind, radcrit::RadicalKind::SolvableRadical);
  EXPECT_EQ(s4.method, radcrit::RadicalMethod::Oracle);
  EXPECT_TRUE(radical("A(5)").subgroup.is_trivial());
  auto c5a5 = radical("direct(C(5),A(5))");
  EXPECT_EQ(c5a5.subgroup.order(), 5);
  EXPECT_TRUE(c5a5.subgroup.contains(P("(1,2,3,4,5)", 10)));
}

TEST(RadicalOracles, Fitting) {
  Bsgs s4 = group("S(4)");
  auto f = radcrit::fitting_oracle(s4, radcrit::conjugacy_classes(s4));
  EXPECT_EQ(f.subgroup.order(), 4);
  for (const auto& text : {"(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"}) EXPECT_TRUE(f.subgroup.contains(P(text, 4)));

  Bsgs s3 = group("S(3)");
  auto f3 = radcrit::fitting_oracle(s3, radcrit::conjugacy_classes(s3));
  EXPECT_EQ(f3.subgroup.order(), 3);
  EXPECT_TRUE(f3.subgroup.contains(P("(1,2,3)", 3)));

  Bsgs d4 = group("D(4)");
  EXPECT_EQ(radcrit::fitting_oracle(d4, radcrit::conjugacy_classes(d4)).subgroup.order(), 8);
}

TEST(RadicalOracles, NormalSolvableNilpotentAndNested) {
  for (const auto& spec : {"S(3)", "S(4)", "S(5)", "D(6)", "direct(C(4),S(3))", "direct(C(5),A(5))",
                           "direct(S(4),A(5))", "PSL2(7)"}) {
    Bsgs g = group(spec);
    auto classes = radcrit::conjugacy_classes(g);
    auto r = radcrit::solvable_radical_oracle(g, classes);
    auto f = radcrit::fitting_oracle(g, classes);
    for (const auto* sub : {&r.subgroup, &f.subgroup})
      for (const auto& a : g.generators())
        for (const auto& s : sub->generators()) EXPECT_TRUE(sub->contains(radcrit::conjugate(s, a))) << spec;
    EXPECT_TRUE(radcrit::is_solvable(r.subgroup));
    EXPECT_TRUE(radcrit::is_nilpotent(f.subgroup));
    EXPECT_TRUE(r.subgroup.contains_group(f.subgroup)) << spec;
    // every element whose normal closure is solvable is a member
    for (const auto& c : classes)
      for (const auto& e : c.elements)
        if (radcrit::is_solvable(radcrit::normal_closure(g, {&e, 1}))) EXPECT_TRUE(r.subgroup.contains(e));
  }
}

TEST(RadicalOracles, ParallelAndSerialAgree) {
  Bsgs g = group("direct(C(5),A(5))");
  auto classes = radcrit::conjugacy_classes(g);
  auto serial = radcrit::solvable_radical_oracle(g, classes, 1);
  auto parallel = radcrit::solvable_radical_oracle(g, classes, 4);
  EXPECT_EQ(serial.member_class_reps, parallel.member_class_reps);
  EXPECT_EQ(serial.subgroup.order(), parallel.subgroup.order());
}
