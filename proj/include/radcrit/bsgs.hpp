#ifndef RADCRIT_BSGS_HPP
#define RADCRIT_BSGS_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "radcrit/error.hpp"
#include "radcrit/permutation.hpp"

namespace radcrit {

using Order = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultElementCap = 200000;

/// Generators of a permutation group of fixed degree. Identity entries and
/// duplicates are dropped; the empty list generates the trivial group.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::size_t degree = 0) : degree_(degree) {}

  GeneratorSet(std::size_t degree, std::span<const Permutation> generators) : degree_(degree) {
    for (const auto& g : generators) add(g);
  }

  GeneratorSet(std::size_t degree, std::initializer_list<Permutation> generators)
      : GeneratorSet(degree, std::span<const Permutation>(generators.begin(), generators.size())) {}

  void add(const Permutation& g) {
    if (g.degree() != degree_)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a generator set of degree " + std::to_string(degree_));
    if (g.is_identity()) return;
    for (const auto& h : generators_)
      if (h == g) return;
    generators_.push_back(g);
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool empty() const noexcept { return generators_.empty(); }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

/// Base and strong generating set built by deterministic Schreier–Sims.
///
/// Each level i holds a base point b_i, the strong generators fixing b_0..b_{i-1},
/// and the orbit of b_i under them together with coset representatives u_p
/// (u_p(b_i) = p) and their inverses. Every group element factors uniquely as
/// u^(0) u^(1) ... u^(k-1) with u^(i) drawn from level i.
///
/// A built Bsgs is only read by const members, which are safe to call concurrently.
class Bsgs {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;               // orbit points in discovery order
    std::vector<std::int32_t> orbit_index;  // point -> position in orbit, -1 if absent
    std::vector<Permutation> transversal;   // parallel to orbit
    std::vector<Permutation> transversal_inverse;
  };

  Bsgs() = default;

  explicit Bsgs(const GeneratorSet& gens) : degree_(gens.degree()), defining_(gens.generators()) {
    strong_ = defining_;
    schreier_sims();
  }

  static Bsgs build(const GeneratorSet& gens) { return Bsgs(gens); }

  static Bsgs trivial(std::size_t degree) { return Bsgs(GeneratorSet(degree)); }

  std::size_t degree() const noexcept { return degree_; }

  /// The generators the group was built from, plus any added later.
  const std::vector<Permutation>& generators() const noexcept { return defining_; }
  GeneratorSet generator_set() const { return GeneratorSet(degree_, defining_); }

  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base_point + 1);
    return b;
  }

  Order order() const {
    Order o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  /// Order as a machine integer; throws if it does not fit.
  std::uint64_t order_u64() const {
    Order o = order();
    if (o > std::numeric_limits<std::uint64_t>::max())
      throw CapExceeded("group order " + o.str() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(o);
  }

  bool is_trivial() const noexcept { return levels_.empty(); }

  /// Sifts p through the chain. Returns the residue and the level at which sifting
  /// stopped (levels().size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(const Permutation& p, std::size_t from_level = 0) const {
    if (p.degree() != degree_)
      throw DegreeMismatch("cannot sift a permutation of degree " + std::to_string(p.degree()) +
                           " in a group of degree " + std::to_string(degree_));
    Permutation g = p;
    for (std::size_t i = from_level; i < levels_.size(); ++i) {
      const Level& l = levels_[i];
      Point image = g[l.base_point];
      std::int32_t idx = l.orbit_index[image];
      if (idx < 0) return {std::move(g), i};
      if (image != l.base_point) g = l.transversal_inverse[static_cast<std::size_t>(idx)] * g;
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_)
      throw DegreeMismatch("membership test for degree " + std::to_string(p.degree()) +
                           " in a group of degree " + std::to_string(degree_));
    return strip(p).first.is_identity();
  }

  /// Whether every generator of `other` lies in this group.
  bool contains_group(const Bsgs& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Adds a generator and restores the BSGS property. Returns false (and leaves the
  /// group unchanged) when g is already a member.
  bool add_generator(const Permutation& g) {
    if (contains(g)) return false;
    defining_.push_back(g);
    strong_.push_back(g);
    schreier_sims();
    return true;
  }

  /// Calls fn on every element exactly once, in transversal-product order.
  /// Throws CapExceeded when the order is above `cap`.
  void for_each_element(std::uint64_t cap, const std::function<void(const Permutation&)>& fn) const {
    if (order() > cap)
      throw CapExceeded("group of order " + order().str() + " exceeds element cap " +
                        std::to_string(cap));
    std::vector<Permutation> partial{Permutation(degree_)};
    enumerate_from(0, partial, fn);
  }

  std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(std::min<Order>(order(), Order(cap))));
    for_each_element(cap, [&](const Permutation& p) { out.push_back(p); });
    return out;
  }

  /// Uniform random element: a product of uniformly chosen coset representatives.
  template <class Rng>
  Permutation random_element(Rng& rng) const {
    Permutation g(degree_);
    for (const auto& l : levels_) {
      std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
      g = g * l.transversal[pick(rng)];
    }
    return g;
  }

 private:
  void enumerate_from(std::size_t level, std::vector<Permutation>& partial,
                      const std::function<void(const Permutation&)>& fn) const {
    if (level == levels_.size()) {
      fn(partial.back());
      return;
    }
    for (const auto& u : levels_[level].transversal) {
      partial.push_back(partial.back() * u);
      enumerate_from(level + 1, partial, fn);
      partial.pop_back();
    }
  }

  static bool fixes_prefix(const Permutation& g, const std::vector<Level>& levels, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j)
      if (g[levels[j].base_point] != levels[j].base_point) return false;
    return true;
  }

  void rebuild_level(std::size_t i) {
    Level& l = levels_[i];
    l.generators.clear();
    for (const auto& s : strong_)
      if (fixes_prefix(s, levels_, i)) l.generators.push_back(s);
    l.orbit.assign(1, l.base_point);
    l.orbit_index.assign(degree_, -1);
    l.orbit_index[l.base_point] = 0;
    l.transversal.assign(1, Permutation(degree_));
    l.transversal_inverse.assign(1, Permutation(degree_));
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      Point p = l.orbit[k];
      for (const auto& s : l.generators) {
        Point q = s[p];
        if (l.orbit_index[q] >= 0) continue;
        l.orbit_index[q] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(q);
        Permutation u = s * l.transversal[k];
        l.transversal_inverse.push_back(u.inverse());
        l.transversal.push_back(std::move(u));
      }
    }
  }

  void append_base_point_for(const Permutation& g) {
    Level l;
    l.base_point = static_cast<Point>(g.first_moved_point());
    levels_.push_back(std::move(l));
  }

  // Deterministic Schreier–Sims: levels below i are kept complete; a Schreier
  // generator at level i that fails to sift becomes a new strong generator and the
  // scan resumes at the deepest level it touches.
  void schreier_sims() {
    levels_.clear();
    for (const auto& g : strong_)
      if (fixes_prefix(g, levels_, levels_.size())) append_base_point_for(g);
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool jumped = false;
      Level& l = levels_[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; !jumped && k < l.orbit.size(); ++k) {
        Point p = l.orbit[k];
        for (std::size_t si = 0; si < l.generators.size(); ++si) {
          const Permutation& s = l.generators[si];
          Point sp = s[p];
          auto target = static_cast<std::size_t>(l.orbit_index[sp]);
          // Trivial Schreier generator: u_{s(p)} was defined as s * u_p.
          Permutation schreier = l.transversal_inverse[target] * s * l.transversal[k];
          if (schreier.is_identity()) continue;
          auto [residue, level] = strip(schreier, static_cast<std::size_t>(i) + 1);
          if (residue.is_identity()) continue;
          if (level == levels_.size()) append_base_point_for(residue);
          strong_.push_back(std::move(residue));
          for (std::size_t j = static_cast<std::size_t>(i) + 1; j <= level; ++j) rebuild_level(j);
          i = static_cast<std::ptrdiff_t>(level);
          jumped = true;
          break;
        }
      }
      if (!jumped) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> defining_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

inline Bsgs build_bsgs(const GeneratorSet& gens) { return Bsgs(gens); }

inline bool contains(const Bsgs& group, const Permutation& p) { return group.contains(p); }

/// Subgroup generated by the given elements.
inline Bsgs generate(std::size_t degree, std::span<const Permutation> elements) {
  return Bsgs(GeneratorSet(degree, elements));
}

inline Bsgs generate(std::size_t degree, std::initializer_list<Permutation> elements) {
  return Bsgs(GeneratorSet(degree, elements));
}

/// Smallest subgroup of `group` containing `seeds` and normalized by `group`.
inline Bsgs normal_closure(const Bsgs& group, std::span<const Permutation> seeds) {
  for (const auto& s : seeds)
    if (!group.contains(s))
      throw PreconditionError("normal closure seed " + print_cycles(s) + " is not a group member");
  Bsgs closure = Bsgs::trivial(group.degree());
  std::vector<Permutation> pending;
  for (const auto& s : seeds)
    if (closure.add_generator(s)) pending.push_back(s);
  for (std::size_t k = 0; k < pending.size(); ++k) {
    for (const auto& a : group.generators()) {
      Permutation c = conjugate(pending[k], a);
      if (closure.add_generator(c)) pending.push_back(std::move(c));
    }
  }
  return closure;
}

inline Bsgs normal_closure(const Bsgs& group, const GeneratorSet& seeds) {
  return normal_closure(group, std::span<const Permutation>(seeds.generators()));
}

/// Orbit of x under conjugation by `group`, with a conjugator for each orbit
/// element: conjugate(x, conjugators[i]) == elements[i]. elements[0] == x.
struct ConjugationOrbit {
  std::vector<Permutation> elements;
  std::vector<Permutation> conjugators;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
};

inline ConjugationOrbit conjugation_orbit(const Bsgs& group, const Permutation& x) {
  ConjugationOrbit orbit;
  orbit.elements.push_back(x);
  orbit.conjugators.emplace_back(group.degree());
  orbit.index.emplace(x, 0);
  for (std::size_t k = 0; k < orbit.elements.size(); ++k) {
    for (const auto& s : group.generators()) {
      Permutation y = conjugate(orbit.elements[k], s);
      if (orbit.index.contains(y)) continue;
      orbit.index.emplace(y, static_cast<std::uint32_t>(orbit.elements.size()));
      orbit.elements.push_back(std::move(y));
      orbit.conjugators.push_back(s * orbit.conjugators[k]);
    }
  }
  return orbit;
}

/// Stabilizer of x under conjugation, from Schreier generators of its conjugation orbit.
inline Bsgs centralizer_from_orbit(const Bsgs& group, const ConjugationOrbit& orbit) {
  Bsgs cent = Bsgs::trivial(group.degree());
  const Order target = group.order() / orbit.elements.size();
  for (std::size_t k = 0; k < orbit.elements.size() && cent.order() < target; ++k) {
    for (const auto& s : group.generators()) {
      Permutation y = conjugate(orbit.elements[k], s);
      const auto& back = orbit.conjugators[orbit.index.at(y)];
      Permutation schreier = back.inverse() * s * orbit.conjugators[k];
      cent.add_generator(schreier);
      if (cent.order() == target) break;
    }
  }
  return cent;
}

/// C_G(x) for x in G.
inline Bsgs centralizer(const Bsgs& group, const Permutation& x) {
  if (!group.contains(x))
    throw PreconditionError("centralizer: " + print_cycles(x) + " is not a group member");
  return centralizer_from_orbit(group, conjugation_orbit(group, x));
}

/// Elements of the group in transversal-product order; throws CapExceeded above cap.
inline std::vector<Permutation> enumerate_elements(const Bsgs& group, std::uint64_t cap) {
  return group.elements(cap);
}

/// Reproducible sampler of uniformly distributed group elements.
class RandomElements {
 public:
  RandomElements(const Bsgs& group, std::uint64_t seed) : group_(&group), rng_(seed) {}
  Permutation next() { return group_->random_element(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  const Bsgs* group_;
  std::mt19937_64 rng_;
};

inline Permutation random_element(const Bsgs& group, std::uint64_t seed) {
  RandomElements sampler(group, seed);
  return sampler.next();
}

}  // namespace radcrit

#endif  // RADCRIT_BSGS_HPP
