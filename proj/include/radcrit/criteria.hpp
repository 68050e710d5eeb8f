#ifndef RADCRIT_CRITERIA_HPP
#define RADCRIT_CRITERIA_HPP

// Conjugate-generation criteria for membership in the solvable radical R(G) and
// the Fitting subgroup F(G):
//
//   Baer–Suzuki:     g ∈ F(G)  iff  ⟨g, xgx⁻¹⟩ is nilpotent for every x ∈ G.
//   four conjugates: g ∈ R(G)  iff  ⟨g, aga⁻¹, bgb⁻¹, cgc⁻¹⟩ is solvable for all a, b, c.
//   two conjugates:  for g of prime order > 3,
//                    g ∈ R(G)  iff  ⟨g, xgx⁻¹⟩ is solvable for every x ∈ G.
//   class pairs:     G solvable iff any two elements of one class generate a solvable group.
//   Thompson:        G solvable iff every two-generated subgroup is solvable.
//
// "For every x ∈ G" is reduced to one conjugate h = xgx⁻¹ per orbit of C_G(g) on
// the class of g (see reduced_conjugate_orbit). Representatives are visited in
// lexicographic order, so exhaustive verdicts and first witnesses are reproducible.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "radcrit/bsgs.hpp"
#include "radcrit/classes.hpp"
#include "radcrit/parallel.hpp"
#include "radcrit/structure.hpp"

namespace radcrit {

enum class SearchMode { Exhaustive, Randomized };

inline std::string_view to_string(SearchMode m) {
  return m == SearchMode::Exhaustive ? "EXHAUSTIVE" : "RANDOMIZED";
}

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultSampleBudget = 1000;

struct CriteriaOptions {
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t tuple_budget = kDefaultTupleBudget;  // per element, four-conjugate exhaustive search
  std::uint64_t sample_budget = kDefaultSampleBudget;  // per element, randomized search
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Conjugators x₁..x_k such that ⟨g, x₁gx₁⁻¹, ..., x_kgx_k⁻¹⟩ fails the criterion,
/// together with what that subgroup turned out to be.
struct Witness {
  std::vector<Permutation> conjugators;
  Order generated_order = 0;
  bool solvable = false;
  bool nilpotent = false;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// ⟨g, x g x⁻¹ for x in conjugators⟩.
inline Bsgs conjugate_subgroup(const Permutation& g, const std::vector<Permutation>& conjugators) {
  GeneratorSet gens(g.degree());
  gens.add(g);
  for (const auto& x : conjugators) gens.add(conjugate(g, x));
  return Bsgs(gens);
}

inline Witness make_witness(const Permutation& g, std::vector<Permutation> conjugators) {
  Bsgs h = conjugate_subgroup(g, conjugators);
  Witness w;
  w.conjugators = std::move(conjugators);
  w.generated_order = h.order();
  w.solvable = is_solvable(h);
  w.nilpotent = is_nilpotent(h);
  return w;
}

/// Rebuilds the witnessed subgroup from scratch and compares order and flags.
inline bool witness_regenerates(const Permutation& g, const Witness& w) {
  return make_witness(g, w.conjugators) == w;
}

/// Outcome of a membership criterion for one element.
///
/// Exhaustive runs claim membership exactly when no witness exists. Randomized runs
/// can only falsify: without a witness they leave the element undecided
/// (in_radical_claimed = false, no witness).
struct CriterionVerdict {
  Permutation element;
  bool in_radical_claimed = false;
  std::optional<Witness> witness;
  SearchMode search_mode = SearchMode::Exhaustive;
  std::uint64_t tuples_checked = 0;

  bool decided() const { return in_radical_claimed || witness.has_value(); }
};

/// Order data for one element; `prime_order_gt3` marks the elements the
/// two-conjugate criterion applies to.
struct ElementProfile {
  Permutation element;
  std::uint64_t order = 1;
  bool prime_order_gt3 = false;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline ElementProfile profile(const Permutation& g) {
  std::uint64_t o = g.order();
  return {g, o, o > 3 && is_prime(o)};
}

/// One profile per class whose representative has prime order greater than 3.
inline std::vector<ElementProfile> prime_order_elements(const std::vector<ConjugacyClass>& classes) {
  std::vector<ElementProfile> out;
  for (const auto& c : classes) {
    ElementProfile p = profile(c.representative);
    if (p.prime_order_gt3) out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

inline std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// The searches run on the class representative r. For g = t r t⁻¹ a conjugator x
// found for r becomes t x t⁻¹ for g.
inline CriterionVerdict transport(CriterionVerdict v, const Permutation& g, const Permutation& t) {
  v.element = g;
  if (v.witness) {
    for (auto& x : v.witness->conjugators) x = conjugate(x, t);
  }
  return v;
}

enum class PairProperty { Solvable, Nilpotent };

inline bool has_property(const Bsgs& h, PairProperty p) {
  return p == PairProperty::Solvable ? is_solvable(h) : is_nilpotent(h);
}

// Exhaustive ∀x: ⟨g, xgx⁻¹⟩ has the property, g the class representative.
inline CriterionVerdict pair_search(const Bsgs& group, const ConjugacyClass& cls, PairProperty property) {
  CriterionVerdict v;
  v.element = cls.representative;
  v.search_mode = SearchMode::Exhaustive;
  const Permutation& g = cls.representative;
  for (const auto& rep : reduced_conjugate_orbit(group, cls)) {
    ++v.tuples_checked;
    if (!has_property(generate(g.degree(), {g, rep.element}), property)) {
      v.witness = make_witness(g, {rep.conjugator});
      return v;
    }
  }
  v.in_radical_claimed = true;
  return v;
}

inline CriterionVerdict pair_sample(const Bsgs& group, const Permutation& g, PairProperty property,
                                    std::uint64_t samples, std::uint64_t seed) {
  CriterionVerdict v;
  v.element = g;
  v.search_mode = SearchMode::Randomized;
  RandomElements sampler(group, seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    Permutation x = sampler.next();
    ++v.tuples_checked;
    if (!has_property(generate(g.degree(), {g, conjugate(g, x)}), property)) {
      v.witness = make_witness(g, {x});
      return v;
    }
  }
  return v;
}

inline void require_member(const Bsgs& group, const Permutation& g, std::string_view what) {
  if (!group.contains(g))
    throw PreconditionError(std::string(what) + ": " + print_cycles(g) + " is not a member of the group");
}

inline void require_prime_order_gt3(const Permutation& g, std::string_view what) {
  if (!profile(g).prime_order_gt3)
    throw PreconditionError(std::string(what) + ": " + print_cycles(g) + " has order " +
                            std::to_string(g.order()) + ", which is not a prime greater than 3");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Two conjugates, prime order > 3

/// Two-conjugate test for the representative of `cls`.
inline CriterionVerdict two_conjugate_test(const Bsgs& group, const ConjugacyClass& cls,
                                           const CriteriaOptions& options = {}) {
  detail::require_prime_order_gt3(cls.representative, "two_conjugate_test");
  if (options.mode == SearchMode::Randomized)
    return detail::pair_sample(group, cls.representative, detail::PairProperty::Solvable, options.sample_budget,
                               options.seed);
  return detail::pair_search(group, cls, detail::PairProperty::Solvable);
}

inline CriterionVerdict two_conjugate_test(const Bsgs& group, const Permutation& g,
                                           const CriteriaOptions& options = {}) {
  detail::require_member(group, g, "two_conjugate_test");
  detail::require_prime_order_gt3(g, "two_conjugate_test");
  if (options.mode == SearchMode::Randomized)
    return detail::pair_sample(group, g, detail::PairProperty::Solvable, options.sample_budget, options.seed);
  ConjugacyClass cls = conjugacy_class_of(group, g);
  return detail::transport(two_conjugate_test(group, cls, options), g, cls.conjugators[cls.index_of(g)]);
}

/// Randomized falsifier for the (NS) property: samples x uniformly and returns the
/// first x with ⟨g, xgx⁻¹⟩ nonsolvable, or nothing within `budget` samples.
inline std::optional<Witness> ns_property_search(const Bsgs& group, const Permutation& g, std::uint64_t budget,
                                                 std::uint64_t rng_seed) {
  detail::require_member(group, g, "ns_property_search");
  detail::require_prime_order_gt3(g, "ns_property_search");
  return detail::pair_sample(group, g, detail::PairProperty::Solvable, budget, rng_seed).witness;
}

// ---------------------------------------------------------------------------
// Four conjugates

namespace detail {

inline CriterionVerdict four_search(const Bsgs& group, const ConjugacyClass& cls, std::uint64_t budget) {
  const Permutation& g = cls.representative;
  const std::size_t m = cls.class_size();
  const Order full = Order(m) * m * m;
  if (full > budget)
    throw BudgetExceeded("four-conjugate search for " + print_cycles(g) + ": class size " + std::to_string(m) +
                         " gives " + full.str() + " triples, above the tuple budget " + std::to_string(budget));
  const Permutation id(g.degree());

  CriterionVerdict v;
  v.element = g;
  v.search_mode = SearchMode::Exhaustive;
  for (const auto& rep : reduced_conjugate_orbit(group, cls)) {
    Bsgs h1 = generate(g.degree(), {g, rep.element});
    if (!is_solvable(h1)) {
      // (h1, g, g) is itself a tuple of conjugates.
      ++v.tuples_checked;
      v.witness = make_witness(g, {rep.conjugator, id, id});
      return v;
    }
    for (std::size_t j = 0; j < m; ++j) {
      Bsgs h2 = h1;
      if (h2.add_generator(cls.elements[j]) && !is_solvable(h2)) {
        ++v.tuples_checked;
        v.witness = make_witness(g, {rep.conjugator, cls.conjugators[j], id});
        return v;
      }
      for (std::size_t k = 0; k < m; ++k) {
        ++v.tuples_checked;
        if (h2.contains(cls.elements[k])) continue;
        Bsgs h3 = h2;
        h3.add_generator(cls.elements[k]);
        if (!is_solvable(h3)) {
          v.witness = make_witness(g, {rep.conjugator, cls.conjugators[j], cls.conjugators[k]});
          return v;
        }
      }
    }
  }
  v.in_radical_claimed = true;
  return v;
}

inline CriterionVerdict four_sample(const Bsgs& group, const Permutation& g, std::uint64_t samples,
                                    std::uint64_t seed) {
  CriterionVerdict v;
  v.element = g;
  v.search_mode = SearchMode::Randomized;
  RandomElements sampler(group, seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    std::vector<Permutation> xs{sampler.next(), sampler.next(), sampler.next()};
    ++v.tuples_checked;
    if (!is_solvable(conjugate_subgroup(g, xs))) {
      v.witness = make_witness(g, std::move(xs));
      return v;
    }
  }
  return v;
}

}  // namespace detail

/// Number of (h1, h2, h3) tuples an exhaustive four-conjugate search covers for
/// this class when the element lies in the radical.
inline std::uint64_t reduced_tuple_count(const Bsgs& group, const ConjugacyClass& cls) {
  std::uint64_t m = cls.class_size();
  return reduced_conjugate_orbit(group, cls).size() * m * m;
}

inline CriterionVerdict four_conjugate_test(const Bsgs& group, const ConjugacyClass& cls,
                                            const CriteriaOptions& options = {}) {
  if (options.mode == SearchMode::Randomized)
    return detail::four_sample(group, cls.representative, options.sample_budget, options.seed);
  return detail::four_search(group, cls, options.tuple_budget);
}

inline CriterionVerdict four_conjugate_test(const Bsgs& group, const Permutation& g,
                                            const CriteriaOptions& options = {}) {
  detail::require_member(group, g, "four_conjugate_test");
  if (options.mode == SearchMode::Randomized)
    return detail::four_sample(group, g, options.sample_budget, options.seed);
  ConjugacyClass cls = conjugacy_class_of(group, g);
  return detail::transport(four_conjugate_test(group, cls, options), g, cls.conjugators[cls.index_of(g)]);
}

// ---------------------------------------------------------------------------
// Radicals from criteria

/// A radical computed by a criterion, with the per-class verdicts behind it.
struct CriterionRun {
  RadicalResult radical;
  std::vector<CriterionVerdict> verdicts;  // one per class, in class order
};

namespace detail {

template <class Test>
CriterionRun run_over_classes(const Bsgs& group, const std::vector<ConjugacyClass>& classes, RadicalKind kind,
                              const CriteriaOptions& options, Test test) {
  CriterionRun run;
  run.verdicts = parallel_map(classes.size(), options.threads, [&](std::size_t i) {
    CriteriaOptions per_class = options;
    per_class.seed = derived_seed(options.seed, i);
    return test(classes[i], per_class);
  });
  run.radical.kind = kind;
  run.radical.method = RadicalMethod::Criterion;
  for (const auto& v : run.verdicts)
    if (v.in_radical_claimed) run.radical.member_class_reps.push_back(v.element);
  run.radical.subgroup = normal_closure(group, run.radical.member_class_reps);
  return run;
}

}  // namespace detail

/// F(G) as the normal closure of the class representatives g with ⟨g, xgx⁻¹⟩
/// nilpotent for all x.
inline CriterionRun baer_suzuki_set(const Bsgs& group, const std::vector<ConjugacyClass>& classes,
                                    const CriteriaOptions& options = {}) {
  return detail::run_over_classes(group, classes, RadicalKind::Fitting, options,
                                  [&](const ConjugacyClass& cls, const CriteriaOptions& o) {
                                    if (o.mode == SearchMode::Randomized)
                                      return detail::pair_sample(group, cls.representative,
                                                                 detail::PairProperty::Nilpotent, o.sample_budget,
                                                                 o.seed);
                                    return detail::pair_search(group, cls, detail::PairProperty::Nilpotent);
                                  });
}

/// R(G) as the normal closure of the class representatives passing the
/// four-conjugate test.
inline CriterionRun four_conjugate_radical(const Bsgs& group, const std::vector<ConjugacyClass>& classes,
                                           const CriteriaOptions& options = {}) {
  return detail::run_over_classes(group, classes, RadicalKind::SolvableRadical, options,
                                  [&](const ConjugacyClass& cls, const CriteriaOptions& o) {
                                    return four_conjugate_test(group, cls, o);
                                  });
}

/// Two-conjugate verdicts for every class whose representative has prime order > 3.
inline std::vector<CriterionVerdict> two_conjugate_all(const Bsgs& group, const std::vector<ConjugacyClass>& classes,
                                                       const CriteriaOptions& options = {}) {
  std::vector<const ConjugacyClass*> eligible;
  for (const auto& c : classes)
    if (profile(c.representative).prime_order_gt3) eligible.push_back(&c);
  return parallel_map(eligible.size(), options.threads, [&](std::size_t i) {
    CriteriaOptions o = options;
    o.seed = detail::derived_seed(options.seed, i);
    return two_conjugate_test(group, *eligible[i], o);
  });
}

// ---------------------------------------------------------------------------
// Whole-group solvability criteria

/// Class-pair criterion: every class rep g and every reduced conjugate h give a
/// solvable ⟨g, h⟩. A failure carries g and a conjugator x with ⟨g, xgx⁻¹⟩ nonsolvable.
struct ClassPairVerdict {
  bool all_solvable = true;
  std::optional<Permutation> element;
  std::optional<Witness> witness;
  std::uint64_t pairs_checked = 0;
};

inline ClassPairVerdict class_pair_solvability(const Bsgs& group, const std::vector<ConjugacyClass>& classes,
                                               unsigned threads = 1) {
  auto verdicts = parallel_map(classes.size(), threads, [&](std::size_t i) {
    return detail::pair_search(group, classes[i], detail::PairProperty::Solvable);
  });
  ClassPairVerdict out;
  for (auto& v : verdicts) {
    out.pairs_checked += v.tuples_checked;
    if (v.witness) {
      out.all_solvable = false;
      out.element = v.element;
      out.witness = std::move(v.witness);
      break;
    }
  }
  return out;
}

/// Thompson criterion: every pair (a, b) generates a solvable subgroup. a runs over
/// class representatives and b over representatives of the C(a)-conjugation orbits
/// on G, which covers all pairs up to simultaneous conjugation.
struct ThompsonVerdict {
  bool all_solvable = true;
  std::optional<std::pair<Permutation, Permutation>> pair;
  Order generated_order = 0;
  std::uint64_t pairs_checked = 0;
};

inline ThompsonVerdict thompson_test(const Bsgs& group, const std::vector<ConjugacyClass>& classes,
                                     std::uint64_t element_cap = kDefaultElementCap, unsigned threads = 1) {
  std::vector<Permutation> all = group.elements(element_cap);
  std::sort(all.begin(), all.end());
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> position;
  for (std::size_t i = 0; i < all.size(); ++i) position.emplace(all[i], static_cast<std::uint32_t>(i));

  struct PerClass {
    std::uint64_t checked = 0;
    std::optional<Permutation> partner;
    Order order = 0;
  };
  auto per_class = parallel_map(classes.size(), threads, [&](std::size_t ci) {
    PerClass r;
    const Permutation& a = classes[ci].representative;
    if (a.is_identity()) return r;
    const auto& cent = classes[ci].centralizer;
    std::vector<bool> seen(all.size(), false);
    std::vector<std::uint32_t> queue;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (seen[i]) continue;
      seen[i] = true;
      queue.assign(1, static_cast<std::uint32_t>(i));
      for (std::size_t k = 0; k < queue.size(); ++k)
        for (const auto& c : cent.generators()) {
          std::uint32_t j = position.at(conjugate(all[queue[k]], c));
          if (!seen[j]) {
            seen[j] = true;
            queue.push_back(j);
          }
        }
      ++r.checked;
      Bsgs h = generate(a.degree(), {a, all[i]});
      if (!is_solvable(h)) {
        r.partner = all[i];
        r.order = h.order();
        return r;
      }
    }
    return r;
  });

  ThompsonVerdict out;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    out.pairs_checked += per_class[ci].checked;
    if (per_class[ci].partner) {
      out.all_solvable = false;
      out.pair.emplace(classes[ci].representative, *per_class[ci].partner);
      out.generated_order = per_class[ci].order;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sharpness of the four-conjugate bound

struct SharpnessReport {
  unsigned n = 0;
  std::uint64_t triples_checked = 0;
  bool all_solvable = true;
  Order max_generated_order = 1;
};

/// Every unordered triple of distinct transpositions of S(n), 5 <= n <= 8,
/// checked for generating a solvable subgroup.
inline SharpnessReport transposition_triple_sharpness(unsigned n) {
  if (n < 5 || n > 8) throw PreconditionError("transposition_triple_sharpness: n must be in 5..8");
  std::vector<Permutation> transpositions;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      transpositions.push_back(parse_cycles("(" + std::to_string(i) + "," + std::to_string(j) + ")", n));
  SharpnessReport r;
  r.n = n;
  const std::size_t t = transpositions.size();
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b)
      for (std::size_t c = b + 1; c < t; ++c) {
        Bsgs h = generate(n, {transpositions[a], transpositions[b], transpositions[c]});
        ++r.triples_checked;
        if (!is_solvable(h)) r.all_solvable = false;
        if (h.order() > r.max_generated_order) r.max_generated_order = h.order();
      }
  return r;
}

}  // namespace radcrit

#endif  // RADCRIT_CRITERIA_HPP
