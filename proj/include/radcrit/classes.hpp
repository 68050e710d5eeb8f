#ifndef RADCRIT_CLASSES_HPP
#define RADCRIT_CLASSES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "radcrit/bsgs.hpp"

namespace radcrit {

/// A conjugacy class at desk scale: every element is listed (sorted
/// lexicographically), each with a conjugator carrying the representative to it.
struct ConjugacyClass {
  Permutation representative;  // lexicographically smallest element of the class
  std::vector<Permutation> elements;
  std::vector<Permutation> conjugators;  // conjugate(representative, conjugators[i]) == elements[i]
  Bsgs centralizer;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;

  std::size_t class_size() const noexcept { return elements.size(); }
  std::uint64_t element_order() const { return representative.order(); }

  bool contains(const Permutation& p) const { return index.contains(p); }
  std::uint32_t index_of(const Permutation& p) const { return index.at(p); }
};

namespace detail {

inline ConjugacyClass make_class(const Bsgs& group, const Permutation& x) {
  ConjugationOrbit orbit = conjugation_orbit(group, x);
  ConjugacyClass cls;
  cls.centralizer = centralizer_from_orbit(group, orbit);

  std::vector<std::size_t> order(orbit.elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return orbit.elements[a] < orbit.elements[b]; });
  cls.elements.reserve(order.size());
  cls.conjugators.reserve(order.size());
  for (std::size_t k : order) {
    cls.index.emplace(orbit.elements[k], static_cast<std::uint32_t>(cls.elements.size()));
    cls.elements.push_back(std::move(orbit.elements[k]));
    cls.conjugators.push_back(std::move(orbit.conjugators[k]));
  }
  cls.representative = cls.elements.front();
  // Re-anchor conjugators at the smallest element.
  if (cls.representative != x) {
    Permutation to_rep = cls.conjugators.front();
    Permutation to_x = to_rep.inverse();
    for (auto& c : cls.conjugators) c = c * to_x;
    GeneratorSet moved(group.degree());
    for (const auto& c : cls.centralizer.generators()) moved.add(conjugate(c, to_rep));
    cls.centralizer = Bsgs(moved);
  }
  return cls;
}

}  // namespace detail

/// Conjugacy class of x in the group, with its centralizer.
inline ConjugacyClass conjugacy_class_of(const Bsgs& group, const Permutation& x) {
  if (!group.contains(x))
    throw PreconditionError("conjugacy class: " + print_cycles(x) + " is not a group member");
  return detail::make_class(group, x);
}

/// All conjugacy classes, ordered by their (lexicographically smallest)
/// representative; the identity class comes first.
inline std::vector<ConjugacyClass> conjugacy_classes(const Bsgs& group,
                                                     std::uint64_t element_cap = kDefaultElementCap) {
  std::vector<Permutation> all = group.elements(element_cap);
  std::sort(all.begin(), all.end());
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> position;
  position.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) position.emplace(all[i], static_cast<std::uint32_t>(i));

  std::vector<bool> assigned(all.size(), false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (assigned[i]) continue;
    ConjugacyClass cls = detail::make_class(group, all[i]);
    for (const auto& e : cls.elements) assigned[position.at(e)] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Representative of one orbit of a group acting by conjugation on a finite set.
struct OrbitRepresentative {
  Permutation element;  // canonically (lexicographically) smallest orbit member
  Permutation conjugator;  // from the class: conjugate(class representative, conjugator) == element
  std::size_t orbit_size = 0;
};

/// Orbits of `cent` (the centralizer of x) acting by conjugation on the class of x.
/// One representative per orbit, each the smallest element of its orbit, listed in
/// increasing order; orbit sizes sum to the class size.
///
/// ⟨x, h⟩ and ⟨x, c h c⁻¹⟩ = c⟨x, h⟩c⁻¹ are conjugate for c in C(x), so any property
/// of ⟨x, h⟩ invariant under conjugation only needs one h per orbit.
inline std::vector<OrbitRepresentative> reduced_conjugate_orbit(const Bsgs& ambient, const Permutation& x,
                                                                const ConjugacyClass& class_of_x,
                                                                const Bsgs& cent) {
  (void)ambient;
  if (!class_of_x.contains(x))
    throw PreconditionError("reduced_conjugate_orbit: element not in the supplied class");
  std::vector<OrbitRepresentative> reps;
  std::vector<bool> seen(class_of_x.class_size(), false);
  std::vector<std::uint32_t> queue;
  for (std::size_t i = 0; i < class_of_x.class_size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    queue.assign(1, static_cast<std::uint32_t>(i));
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto& c : cent.generators()) {
        std::uint32_t j = class_of_x.index_of(conjugate(class_of_x.elements[queue[k]], c));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    reps.push_back({class_of_x.elements[i], class_of_x.conjugators[i], queue.size()});
  }
  return reps;
}

inline std::vector<OrbitRepresentative> reduced_conjugate_orbit(const Bsgs& ambient, const ConjugacyClass& cls) {
  return reduced_conjugate_orbit(ambient, cls.representative, cls, cls.centralizer);
}

}  // namespace radcrit

#endif  // RADCRIT_CLASSES_HPP
