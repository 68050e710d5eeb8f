#ifndef RADCRIT_ZOO_HPP
#define RADCRIT_ZOO_HPP

// Group constructors and the GroupSpec mini-language:
//
//   S(n)   symmetric group on n points
//   A(n)   alternating group on n points
//   C(n)   cyclic group of order n on n points
//   D(n)   dihedral group of order 2n on n points (n >= 3)
//   PSL2(p)  PSL(2,p) on the p+1 points of the projective line, p prime, 5 <= p <= 31
//   direct(spec, spec, ...)  direct product on disjoint supports (nesting depth <= 3)
//   file:<path>  generators from a JSON group file

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "radcrit/bsgs.hpp"
#include "radcrit/criteria.hpp"
#include "radcrit/error.hpp"
#include "radcrit/permutation.hpp"

namespace radcrit {

inline GeneratorSet symmetric_group(std::size_t n) {
  if (n < 1) throw PreconditionError("S(n) needs n >= 1");
  GeneratorSet gens(n);
  if (n >= 2) {
    gens.add(parse_cycles("(1,2)", n));
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n + 1);
    gens.add(Permutation::from_images(cycle));
  }
  return gens;
}

inline GeneratorSet alternating_group(std::size_t n) {
  if (n < 1) throw PreconditionError("A(n) needs n >= 1");
  GeneratorSet gens(n);
  if (n < 3) return gens;
  gens.add(parse_cycles("(1,2,3)", n));
  // (3,4,...,n) for odd n, (1,2)(3,4,...,n) for even n; both even permutations.
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i + 1);
  for (std::size_t i = 2; i < n; ++i) images[i] = static_cast<Point>(i + 1 < n ? i + 2 : 3);
  if (n % 2 == 0) std::swap(images[0], images[1]);
  gens.add(Permutation::from_images(images));
  return gens;
}

inline GeneratorSet cyclic_group(std::size_t n) {
  if (n < 1) throw PreconditionError("C(n) needs n >= 1");
  GeneratorSet gens(n);
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n + 1);
  gens.add(Permutation::from_images(cycle));
  return gens;
}

/// Dihedral group of order 2n: rotation (1,...,n) and the reflection through the
/// axis of point 1 (point k -> point 2 - k mod n).
inline GeneratorSet dihedral_group(std::size_t n) {
  if (n < 3) throw PreconditionError("D(n) needs n >= 3 (order 2n acting on n points)");
  GeneratorSet gens = cyclic_group(n);
  std::vector<Point> reflection(n);
  for (std::size_t k = 0; k < n; ++k) reflection[k] = static_cast<Point>((n - k) % n + 1);
  gens.add(Permutation::from_images(reflection));
  return gens;
}

/// 2×2 matrix over the prime field F_p.
struct PrimeFieldMatrix {
  std::uint64_t p;
  std::uint64_t a, b, c, d;  // [[a, b], [c, d]]

  std::uint64_t determinant() const { return (a * d % p + p - b * c % p) % p; }

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y) {
    const std::uint64_t p = x.p;
    return {p, (x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p, (x.c * y.a + x.d * y.c) % p,
            (x.c * y.b + x.d * y.d) % p};
  }
};

/// Action of a matrix on the projective line P¹(F_p) as a permutation of p+1
/// points: the point (x : 1) is point x+1, and (1 : 0) (infinity) is point p+1.
inline Permutation projective_action(const PrimeFieldMatrix& m) {
  const std::uint64_t p = m.p;
  if (m.determinant() == 0) throw PreconditionError("singular matrix has no projective action");
  auto inv = [p](std::uint64_t v) {
    std::uint64_t r = 1, base = v % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  auto to_point = [&](std::uint64_t x, std::uint64_t y) -> Point {
    if (y == 0) return static_cast<Point>(p);
    return static_cast<Point>(x * inv(y) % p);
  };
  std::vector<Point> images(p + 1);
  for (std::uint64_t x = 0; x < p; ++x) images[x] = to_point((m.a * x + m.b) % p, (m.c * x + m.d) % p);
  images[p] = to_point(m.a, m.c);
  return Permutation::from_zero_based(std::move(images));
}

/// PSL(2,p) generated by [[1,1],[0,1]] and [[0,-1],[1,0]] acting on P¹(F_p).
inline GeneratorSet psl2_perm(std::uint64_t p) {
  if (p < 5 || p > 31 || !is_prime(p)) throw PreconditionError("PSL2(p) needs a prime 5 <= p <= 31");
  GeneratorSet gens(p + 1);
  gens.add(projective_action({p, 1, 1, 0, 1}));
  gens.add(projective_action({p, 0, p - 1, 1, 0}));
  return gens;
}

/// Direct product on disjoint supports: factor k acts on the block of points
/// following the blocks of factors 0..k-1.
inline GeneratorSet direct_product(const std::vector<GeneratorSet>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  GeneratorSet gens(degree);
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<Point> images(degree);
      for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < f.degree(); ++i) images[offset + i] = static_cast<Point>(offset + g[i]);
      gens.add(Permutation::from_zero_based(std::move(images)));
    }
    offset += f.degree();
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Group files

struct GroupFile {
  int format_version = 1;
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::optional<std::string> claimed_order;  // decimal
  std::string provenance;
};

inline GroupFile parse_group_file(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group file is not valid JSON: ") + e.what());
  }
  GroupFile f;
  try {
    f.format_version = doc.at("format_version").get<int>();
    if (f.format_version != 1)
      throw ParseError("unsupported group file format_version " + std::to_string(f.format_version));
    f.name = doc.value("name", "");
    f.degree = doc.at("degree").get<std::size_t>();
    f.generators = doc.at("generators").get<std::vector<std::string>>();
    if (doc.contains("claimed_order") && !doc["claimed_order"].is_null()) {
      const auto& co = doc["claimed_order"];
      f.claimed_order = co.is_string() ? co.get<std::string>() : co.dump();
    }
    f.provenance = doc.value("provenance", "");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group file: ") + e.what());
  }
  if (f.degree < 1) throw ParseError("group file: degree must be positive");
  return f;
}

inline std::string to_json_text(const GroupFile& f) {
  nlohmann::ordered_json doc;
  doc["format_version"] = f.format_version;
  doc["name"] = f.name;
  doc["degree"] = f.degree;
  doc["generators"] = f.generators;
  if (f.claimed_order) doc["claimed_order"] = Order(*f.claimed_order) <= Order(std::numeric_limits<std::uint64_t>::max())
                                                  ? nlohmann::ordered_json(std::stoull(*f.claimed_order))
                                                  : nlohmann::ordered_json(*f.claimed_order);
  doc["provenance"] = f.provenance;
  return doc.dump(2) + "\n";
}

struct LoadedGroup {
  GeneratorSet generators;
  GroupFile metadata;
};

/// Parses the generators of a group file and, when an order is claimed, checks it
/// against Schreier–Sims.
inline LoadedGroup load_group_text(std::string_view json_text) {
  GroupFile f = parse_group_file(json_text);
  GeneratorSet gens(f.degree);
  for (const auto& text : f.generators) gens.add(parse_cycles(text, f.degree));
  if (f.claimed_order) {
    Order claimed;
    try {
      claimed = Order(*f.claimed_order);
    } catch (const std::exception&) {
      throw ParseError("group file: claimed_order \"" + *f.claimed_order + "\" is not an integer");
    }
    Order actual = Bsgs(gens).order();
    if (claimed != actual)
      throw OrderMismatch("group file \"" + f.name + "\": claimed order " + claimed.str() +
                          " but the generators give order " + actual.str());
  }
  return {std::move(gens), std::move(f)};
}

inline LoadedGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_group_text(buffer.str());
}

// ---------------------------------------------------------------------------
// GroupSpec

namespace detail {

class SpecParser {
 public:
  SpecParser(std::string_view text, std::filesystem::path base_dir) : text_(text), base_dir_(std::move(base_dir)) {}

  GeneratorSet parse() {
    GeneratorSet g = parse_spec(0);
    skip_ws();
    if (pos_ != text_.size()) throw error("trailing characters");
    return g;
  }

 private:
  ParseError error(const std::string& what) const {
    return ParseError("group spec \"" + std::string(text_) + "\": " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) throw error(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 100000) throw error("parameter too large");
      ++pos_;
    }
    if (pos_ == start) throw error("expected an integer");
    return v;
  }

  GeneratorSet parse_spec(int depth) {
    skip_ws();
    if (text_.substr(pos_).starts_with("file:")) {
      pos_ += 5;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      std::string path(text_.substr(start, pos_ - start));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) throw error("empty file path");
      std::filesystem::path p(path);
      if (p.is_relative()) p = base_dir_ / p;
      return load_group_file(p).generators;
    }
    std::string name = identifier();
    if (name.empty()) throw error("expected a group name");
    expect('(');
    if (name == "direct") {
      if (depth >= 3) throw error("direct products nest at most 3 deep");
      std::vector<GeneratorSet> factors;
      do {
        factors.push_back(parse_spec(depth + 1));
      } while (consume(','));
      expect(')');
      return direct_product(factors);
    }
    std::uint64_t n = integer();
    expect(')');
    try {
      if (name == "S") return symmetric_group(n);
      if (name == "A") return alternating_group(n);
      if (name == "C") return cyclic_group(n);
      if (name == "D") return dihedral_group(n);
      if (name == "PSL2") return psl2_perm(n);
    } catch (const PreconditionError& e) {
      throw error(e.what());
    }
    throw error("unknown group family \"" + name + "\"");
  }

  std::string_view text_;
  std::filesystem::path base_dir_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds generators from a GroupSpec. Relative file: paths resolve against base_dir.
inline GeneratorSet construct(std::string_view spec, const std::filesystem::path& base_dir = {}) {
  return detail::SpecParser(spec, base_dir).parse();
}

}  // namespace radcrit

#endif  // RADCRIT_ZOO_HPP
