#ifndef RADCRIT_PERMUTATION_HPP
#define RADCRIT_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radcrit/error.hpp"

namespace radcrit {

using Point = std::uint32_t;

/// A permutation of the points {1, ..., n}.
///
/// Externally (cycle text, `apply`, `from_images`) points are 1-based. Internally
/// images are stored 0-based and `operator[]` exposes that storage directly; the
/// library code uses it on hot paths.
///
/// Composition convention: `p * q` (and `compose(p, q)`) applies q FIRST, then p,
/// i.e. (p * q)(i) = p(q(i)). Conjugation and commutators are defined on top of
/// this convention:
///   conjugate(g, a)  = a * g * a^-1
///   commutator(x, y) = x * y * x^-1 * y^-1
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// From 1-based images: images[i-1] is the image of point i.
  static Permutation from_images(std::span<const Point> one_based) {
    std::vector<Point> zero(one_based.size());
    for (std::size_t i = 0; i < one_based.size(); ++i) {
      if (one_based[i] < 1 || one_based[i] > one_based.size())
        throw PreconditionError("image " + std::to_string(one_based[i]) + " out of range 1.." +
                                std::to_string(one_based.size()));
      zero[i] = one_based[i] - 1;
    }
    return from_zero_based(std::move(zero));
  }

  static Permutation from_zero_based(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
      if (p >= images.size() || seen[p])
        throw PreconditionError("image array is not a bijection");
      seen[p] = true;
    }
    Permutation r;
    r.images_ = std::move(images);
    return r;
  }

  std::size_t degree() const noexcept { return images_.size(); }

  /// 0-based image of 0-based point i.
  Point operator[](std::size_t i) const noexcept { return images_[i]; }

  /// 1-based image of 1-based point.
  Point apply(Point point) const {
    if (point < 1 || point > degree())
      throw PreconditionError("point " + std::to_string(point) + " out of range");
    return images_[point - 1] + 1;
  }

  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Smallest moved 0-based point, or degree() for the identity.
  std::size_t first_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return i;
    return images_.size();
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    Permutation r;
    r.images_ = std::move(inv);
    return r;
  }

  /// Cycle lengths of the disjoint-cycle decomposition, fixed points included as 1s, sorted.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  /// Order of the permutation: lcm of its cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
    return result;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    check_same_degree(p, q);
    std::vector<Point> out(q.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
    Permutation r;
    r.images_ = std::move(out);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on image arrays; the canonical order used for deterministic searches.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  static void check_same_degree(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw DegreeMismatch("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                           std::to_string(q.degree()));
  }

 private:
  std::vector<Point> images_;
};

/// p∘q: apply q first, then p.
inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

inline std::uint64_t order(const Permutation& p) { return p.order(); }

/// a·g·a⁻¹.
inline Permutation conjugate(const Permutation& g, const Permutation& a) {
  Permutation::check_same_degree(g, a);
  // (a g a^-1)(a(i)) = a(g(i))
  std::vector<Point> out(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) out[a[i]] = a[g[i]];
  return Permutation::from_zero_based(std::move(out));
}

/// [x,y] = x·y·x⁻¹·y⁻¹.
inline Permutation commutator(const Permutation& x, const Permutation& y) {
  Permutation::check_same_degree(x, y);
  return x * y * x.inverse() * y.inverse();
}

// ---------------------------------------------------------------------------
// Cycle notation

/// Canonical disjoint-cycle text: cycles ordered by smallest moved point, each
/// rotated to start there, fixed points omitted. The identity prints as "".
inline std::string print_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out;
}

/// Parses cycle text such as "(1,2,3)(4,5)" into a permutation of the given degree.
/// Whitespace is ignored; the empty string is the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("cycle text \"" + std::string(text) + "\": " + what + " at offset " +
                      std::to_string(pos));
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree + 1) value = degree + 1;  // saturate; reported below
        ++pos;
      }
      if (pos == start) throw fail("expected a positive integer");
      if (value < 1 || value > degree)
        throw fail("point out of range 1.." + std::to_string(degree));
      Point point = static_cast<Point>(value - 1);
      if (used[point]) throw fail("repeated point " + std::to_string(value));
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_zero_based(std::move(images));
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace radcrit

template <>
struct std::hash<radcrit::Permutation> : radcrit::PermutationHash {};

#endif  // RADCRIT_PERMUTATION_HPP
