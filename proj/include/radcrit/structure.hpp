#ifndef RADCRIT_STRUCTURE_HPP
#define RADCRIT_STRUCTURE_HPP

#include <string_view>
#include <vector>

#include "radcrit/bsgs.hpp"
#include "radcrit/classes.hpp"
#include "radcrit/parallel.hpp"

namespace radcrit {

/// A descending chain of subgroups. Exactly one of `terminated` (the last term is
/// trivial) and `stabilized` (the last two terms are equal and nontrivial) holds.
struct SeriesResult {
  std::vector<Bsgs> terms;
  bool terminated = false;
  bool stabilized = false;

  const Bsgs& last() const { return terms.back(); }
};

/// [H,H]: normal closure in H of the commutators of H's generators.
inline Bsgs derived_subgroup(const Bsgs& h) {
  std::vector<Permutation> commutators;
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) commutators.push_back(commutator(gens[i], gens[j]));
  return normal_closure(h, commutators);
}

/// [N,H] for N normal in H: normal closure of the commutators of generators.
inline Bsgs commutator_subgroup(const Bsgs& n, const Bsgs& h) {
  std::vector<Permutation> commutators;
  for (const auto& a : n.generators())
    for (const auto& b : h.generators()) commutators.push_back(commutator(a, b));
  return normal_closure(h, commutators);
}

inline SeriesResult derived_series(const Bsgs& h) {
  SeriesResult s;
  s.terms.push_back(h);
  while (!s.terms.back().is_trivial()) {
    Bsgs next = derived_subgroup(s.terms.back());
    if (next.order() == s.terms.back().order()) {
      s.stabilized = true;
      return s;
    }
    s.terms.push_back(std::move(next));
  }
  s.terminated = true;
  return s;
}

/// γ₁ = H, γ_{i+1} = [γ_i, H].
inline SeriesResult lower_central_series(const Bsgs& h) {
  SeriesResult s;
  s.terms.push_back(h);
  while (!s.terms.back().is_trivial()) {
    Bsgs next = commutator_subgroup(s.terms.back(), h);
    if (next.order() == s.terms.back().order()) {
      s.stabilized = true;
      return s;
    }
    s.terms.push_back(std::move(next));
  }
  s.terminated = true;
  return s;
}

inline bool is_solvable(const Bsgs& h) { return derived_series(h).terminated; }

inline bool is_nilpotent(const Bsgs& h) { return lower_central_series(h).terminated; }

enum class RadicalKind { SolvableRadical, Fitting };
enum class RadicalMethod { Oracle, Criterion };

inline std::string_view to_string(RadicalKind k) {
  return k == RadicalKind::SolvableRadical ? "SOLVABLE_RADICAL" : "FITTING";
}
inline std::string_view to_string(RadicalMethod m) {
  return m == RadicalMethod::Oracle ? "ORACLE" : "CRITERION";
}

/// A radical, as the normal closure of the class representatives that qualify.
struct RadicalResult {
  Bsgs subgroup;
  RadicalKind kind = RadicalKind::SolvableRadical;
  std::vector<Permutation> member_class_reps;  // in class order
  RadicalMethod method = RadicalMethod::Oracle;
};

namespace detail {

template <class Predicate>
RadicalResult radical_from_classes(const Bsgs& g, const std::vector<ConjugacyClass>& classes, RadicalKind kind,
                                   RadicalMethod method, unsigned threads, Predicate qualifies) {
  std::vector<char> pass =
      parallel_map(classes.size(), threads, [&](std::size_t i) -> char { return qualifies(classes[i]) ? 1 : 0; });
  RadicalResult r;
  r.kind = kind;
  r.method = method;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (pass[i]) r.member_class_reps.push_back(classes[i].representative);
  r.subgroup = normal_closure(g, r.member_class_reps);
  return r;
}

}  // namespace detail

/// R(G) by definition: x lies in the solvable radical iff its normal closure is solvable.
inline RadicalResult solvable_radical_oracle(const Bsgs& g, const std::vector<ConjugacyClass>& classes,
                                             unsigned threads = 1) {
  return detail::radical_from_classes(g, classes, RadicalKind::SolvableRadical, RadicalMethod::Oracle, threads,
                                      [&](const ConjugacyClass& c) {
                                        return is_solvable(normal_closure(g, {&c.representative, 1}));
                                      });
}

/// F(G) by definition: x lies in the Fitting subgroup iff its normal closure is nilpotent.
inline RadicalResult fitting_oracle(const Bsgs& g, const std::vector<ConjugacyClass>& classes,
                                    unsigned threads = 1) {
  return detail::radical_from_classes(g, classes, RadicalKind::Fitting, RadicalMethod::Oracle, threads,
                                      [&](const ConjugacyClass& c) {
                                        return is_nilpotent(normal_closure(g, {&c.representative, 1}));
                                      });
}

}  // namespace radcrit

#endif  // RADCRIT_STRUCTURE_HPP
