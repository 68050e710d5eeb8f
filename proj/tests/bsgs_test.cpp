#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

using radcrit::Bsgs;
using radcrit::GeneratorSet;
using radcrit::Order;
using radcrit::Permutation;
using testutil::group;
using testutil::P;

namespace {

const std::vector<std::string> kSmallGroups = {
    "S(3)",    "S(4)",    "S(5)",      "A(4)",    "A(5)",          "A(6)",
    "C(1)",    "C(7)",    "C(12)",     "D(4)",    "D(6)",          "PSL2(5)",
    "PSL2(7)", "PSL2(11)", "direct(C(5),A(5))", "direct(C(4),S(3))", "direct(C(4),C(9))",
    "direct(C(7),PSL2(7))"};

}  // namespace

TEST(Bsgs, OrdersOfStandardGroups) {
  EXPECT_EQ(group("S(5)").order(), 120);
  EXPECT_EQ(Bsgs(GeneratorSet(4)).order(), 1);
  EXPECT_TRUE(Bsgs(GeneratorSet(4)).is_trivial());
  EXPECT_EQ(group("S(7)").order(), 5040);
  EXPECT_EQ(group("A(8)").order(), 20160);
}

TEST(Bsgs, OrderFromTwoGenerators) {
  GeneratorSet gens(5, {P("(1,2)", 5), P("(1,2,3,4,5)", 5)});
  Bsgs s5 = radcrit::build_bsgs(gens);
  EXPECT_EQ(s5.order(), 120);
  Order product = 1;
  for (const auto& level : s5.levels()) product *= level.orbit.size();
  EXPECT_EQ(product, s5.order());
}

TEST(Bsgs, StrongGeneratorsSiftAndDefiningGeneratorsAreMembers) {
  for (const auto& spec : kSmallGroups) {
    Bsgs g = group(spec);
    for (const auto& s : g.strong_generators()) EXPECT_TRUE(g.strip(s).first.is_identity()) << spec;
    for (const auto& s : g.generators()) EXPECT_TRUE(g.contains(s)) << spec;
  }
}

TEST(Bsgs, MixedDegreeGeneratorsAreRejected) {
  GeneratorSet gens(4);
  EXPECT_THROW(gens.add(P("(1,2)", 5)), radcrit::DegreeMismatch);
  EXPECT_THROW(group("S(4)").contains(P("(1,2)", 5)), radcrit::DegreeMismatch);
}

TEST(Bsgs, Membership) {
  Bsgs a5 = group("A(5)");
  EXPECT_TRUE(a5.contains(P("(1,2,3)", 5)));
  EXPECT_FALSE(a5.contains(P("(1,2)", 5)));
  EXPECT_TRUE(a5.contains(Permutation(5)));
  EXPECT_TRUE(Bsgs(GeneratorSet(3)).contains(Permutation(3)));
  EXPECT_FALSE(Bsgs(GeneratorSet(3)).contains(P("(1,2)", 3)));
}

// Order and membership agree with breadth-first closure for every small battery group.
TEST(Bsgs, AgreesWithBruteForceClosure) {
  for (const auto& spec : kSmallGroups) {
    GeneratorSet gens = radcrit::construct(spec);
    Bsgs g(gens);
    oracle::ElementSet brute = testutil::brute_elements(gens);
    ASSERT_EQ(g.order(), brute.size()) << spec;
    if (brute.size() > 5000) continue;
    for (const auto& e : brute) EXPECT_TRUE(g.contains(Permutation::from_zero_based({e.begin(), e.end()}))) << spec;
    // Completeness on the symmetric group of the same degree.
    if (gens.degree() <= 7) {
      Bsgs sym = Bsgs(radcrit::symmetric_group(gens.degree()));
      for (const auto& p : sym.elements())
        EXPECT_EQ(g.contains(p), brute.contains(testutil::images(p))) << spec << " " << radcrit::print_cycles(p);
    }
  }
}

TEST(Bsgs, AddGeneratorExtendsTheGroup) {
  Bsgs g = radcrit::generate(5, {P("(1,2,3)", 5)});
  EXPECT_EQ(g.order(), 3);
  EXPECT_FALSE(g.add_generator(P("(1,3,2)", 5)));
  EXPECT_TRUE(g.add_generator(P("(3,4,5)", 5)));
  EXPECT_EQ(g.order(), 60);
  EXPECT_TRUE(g.add_generator(P("(1,2)", 5)));
  EXPECT_EQ(g.order(), 120);
}

TEST(Bsgs, NormalClosure) {
  Bsgs s5 = group("S(5)");
  Permutation three_cycle = P("(1,2,3)", 5);
  Bsgs closure = radcrit::normal_closure(s5, {&three_cycle, 1});
  EXPECT_EQ(closure.order(), 60);
  // Conjugates of a 3-cycle generate A5: check by brute-force element count.
  oracle::ElementSet brute_s5 = testutil::brute_elements(radcrit::construct("S(5)"));
  EXPECT_EQ(oracle::normal_closure(5, brute_s5, {testutil::images(three_cycle)}).size(), 60u);

  Permutation id(5);
  EXPECT_TRUE(radcrit::normal_closure(s5, {&id, 1}).is_trivial());

  Bsgs c5a5 = group("direct(C(5),A(5))");
  Permutation c5 = P("(1,2,3,4,5)", 10);
  EXPECT_EQ(radcrit::normal_closure(c5a5, {&c5, 1}).order(), 5);
}

TEST(Bsgs, NormalClosureIsConjugationInvariant) {
  for (const auto& spec : {"S(5)", "PSL2(7)", "direct(C(4),S(3))", "D(6)"}) {
    Bsgs g = group(spec);
    for (const auto& c : radcrit::conjugacy_classes(g)) {
      Bsgs n = radcrit::normal_closure(g, {&c.representative, 1});
      for (const auto& a : g.generators())
        for (const auto& s : n.generators()) EXPECT_TRUE(n.contains(radcrit::conjugate(s, a))) << spec;
    }
  }
}

TEST(Bsgs, NormalClosureRejectsNonMembers) {
  Permutation odd = P("(1,2)", 5);
  EXPECT_THROW(radcrit::normal_closure(group("A(5)"), {&odd, 1}), radcrit::PreconditionError);
}

TEST(Bsgs, Centralizer) {
  Bsgs s5 = group("S(5)");
  oracle::ElementSet brute_s5 = testutil::brute_elements(radcrit::construct("S(5)"));
  Permutation five = P("(1,2,3,4,5)", 5);
  ASSERT_EQ(oracle::centralizer_order(brute_s5, testutil::images(five)), 5u);
  EXPECT_EQ(radcrit::centralizer(s5, five).order(), 5);

  EXPECT_EQ(radcrit::centralizer(s5, Permutation(5)).order(), 120);

  Bsgs s4 = group("S(4)");
  oracle::ElementSet brute_s4 = testutil::brute_elements(radcrit::construct("S(4)"));
  Permutation dbl = P("(1,2)(3,4)", 4);
  ASSERT_EQ(oracle::centralizer_order(brute_s4, testutil::images(dbl)), 8u);
  Bsgs c = radcrit::centralizer(s4, dbl);
  EXPECT_EQ(c.order(), 8);
  for (const auto& g : c.generators()) EXPECT_EQ(g * dbl, dbl * g);

  EXPECT_THROW(radcrit::centralizer(group("A(5)"), P("(1,2)", 5)), radcrit::PreconditionError);
}

TEST(ConjugacyClasses, SizesMatchBruteForce) {
  auto sizes = [](const std::string& spec) {
    std::vector<std::size_t> out;
    for (const auto& c : radcrit::conjugacy_classes(group(spec))) out.push_back(c.class_size());
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const auto& spec : {"S(4)", "C(5)", "A(5)"})
    EXPECT_EQ(sizes(spec), oracle::class_sizes(testutil::brute_elements(radcrit::construct(spec)))) << spec;
  EXPECT_EQ(sizes("S(4)"), (std::vector<std::size_t>{1, 3, 6, 6, 8}));
  EXPECT_EQ(sizes("C(5)"), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(sizes("A(5)"), (std::vector<std::size_t>{1, 12, 12, 15, 20}));
}

TEST(ConjugacyClasses, PartitionAndOrbitStabilizer) {
  for (const auto& spec : {"S(5)", "A(6)", "PSL2(7)", "direct(C(5),A(5))", "D(6)", "direct(C(4),S(3))"}) {
    Bsgs g = group(spec);
    auto classes = radcrit::conjugacy_classes(g);
    EXPECT_TRUE(classes.front().representative.is_identity());
    Order total = 0;
    std::set<Permutation> seen;
    for (const auto& c : classes) {
      total += c.class_size();
      EXPECT_EQ(Order(c.class_size()) * c.centralizer.order(), g.order()) << spec;
      EXPECT_EQ(c.representative, c.elements.front());
      for (std::size_t i = 0; i < c.class_size(); ++i) {
        EXPECT_TRUE(seen.insert(c.elements[i]).second);
        EXPECT_EQ(c.elements[i].cycle_type(), c.representative.cycle_type());
        EXPECT_EQ(radcrit::conjugate(c.representative, c.conjugators[i]), c.elements[i]);
      }
    }
    EXPECT_EQ(total, g.order()) << spec;
  }
}

TEST(ConjugacyClasses, CapIsEnforced) {
  EXPECT_THROW(radcrit::conjugacy_classes(group("S(7)"), 1000), radcrit::CapExceeded);
  EXPECT_THROW(radcrit::enumerate_elements(group("S(7)"), 5039), radcrit::CapExceeded);
}

TEST(Enumeration, EachElementOnce) {
  auto s3 = radcrit::enumerate_elements(group("S(3)"), 100);
  EXPECT_EQ(std::set<Permutation>(s3.begin(), s3.end()).size(), 6u);
  auto trivial = radcrit::enumerate_elements(Bsgs(GeneratorSet(3)), 1);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(trivial[0].is_identity());
}

TEST(RandomElements, MembersReproducibleAndCovering) {
  Bsgs s4 = group("S(4)");
  radcrit::RandomElements a(s4, 42), b(s4, 42);
  std::set<Permutation> hit;
  for (int k = 0; k < 240; ++k) {
    Permutation x = a.next();
    EXPECT_TRUE(s4.contains(x));
    EXPECT_EQ(x, b.next());
    hit.insert(x);
  }
  EXPECT_EQ(hit.size(), 24u);
  EXPECT_EQ(radcrit::random_element(s4, 5), radcrit::random_element(s4, 5));
}
