#pragma once

// 2x2 matrices over Z/nZ, the free-action membership test, and enumeration of the
// set F_n of matrices that define Beauville structures on Z_n^2.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beauville/modular.hpp"
#include "beauville/parallel.hpp"

namespace beauville {

// (a b; c d) with all entries normalized to [0, n).
class Mat2 {
 public:
  Mat2(Modulus n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  // Entries must already lie in [0, n); no normalization.
  static Mat2 from_normalized(std::uint32_t n, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                              std::uint32_t d) {
    return Mat2(n, {a, b, c, d});
  }
  static Mat2 identity(Modulus n);

  Modulus modulus() const { return Modulus(n_); }
  std::uint32_t n() const { return n_; }

  Residue a() const { return residue(0); }
  Residue b() const { return residue(1); }
  Residue c() const { return residue(2); }
  Residue d() const { return residue(3); }

  // Row-major (a, b, c, d).
  const std::array<std::uint32_t, 4>& entries() const { return e_; }

  // Mixed-radix code ((a*n + b)*n + c)*n + d; numeric order equals lexicographic order.
  std::uint64_t encode() const;
  static Mat2 decode(Modulus n, std::uint64_t code);

  Mat2 operator*(const Mat2& rhs) const;

  bool operator==(const Mat2&) const = default;
  // Lexicographic on (n, a, b, c, d).
  auto operator<=>(const Mat2&) const = default;

  // "a b c d"
  std::string to_string() const;

 private:
  Mat2(std::uint32_t n, std::array<std::uint32_t, 4> e) : n_(n), e_(e) {}
  Residue residue(int i) const { return Residue(e_[i], Modulus(n_)); }

  std::uint32_t n_;
  std::array<std::uint32_t, 4> e_;
};

Residue det(const Mat2& m);
bool is_invertible(const Mat2& m);
// Throws SingularMatrixError when det(m) is not a unit.
Mat2 invert(const Mat2& m);

// All of a, b, c, d, a+b, c+d, a-c, b-d, a+b-c-d and det are units mod n.
bool is_beauville_matrix(const Mat2& m);
// Same test on raw entries against a prebuilt unit table (hot loops).
bool is_beauville_matrix(const UnitTable& units, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                         std::uint32_t d);

// The nine free-action quantities alone, without the determinant.
bool satisfies_free_action_units(const Mat2& m);

// A Mat2 certified to lie in F_n.
class BeauvilleMatrix {
 public:
  // Throws std::invalid_argument if m is not in F_n.
  explicit BeauvilleMatrix(const Mat2& m);

  static std::optional<BeauvilleMatrix> certify(const Mat2& m);

  const Mat2& matrix() const { return m_; }
  std::uint32_t n() const { return m_.n(); }

  bool operator==(const BeauvilleMatrix&) const = default;
  auto operator<=>(const BeauvilleMatrix&) const = default;

 private:
  struct Trusted {};
  BeauvilleMatrix(const Mat2& m, Trusted) : m_(m) {}
  friend class BeauvilleEnumerator;

  Mat2 m_;
};

// An element of Z_n^2.
struct Vec2 {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  auto operator<=>(const Vec2&) const = default;
};

struct GeneratorTriple {
  std::uint32_t n = 0;
  std::array<Vec2, 3> entries;

  bool sums_to_zero() const;
  bool operator==(const GeneratorTriple&) const = default;
};

struct TriplePair {
  GeneratorTriple first;
  GeneratorTriple second;
};

GeneratorTriple standard_triple(std::uint32_t n);
// first = ((1,0),(0,1),(-1,-1)); second = ((a,c),(b,d),(-a-b,-c-d)).
TriplePair triples_of(const Mat2& m);
TriplePair triples_of(const BeauvilleMatrix& m);

// Streams F_n in lexicographic (a, b, c, d) order. Candidates are pruned level by level:
// a unit; b unit with a+b unit; c unit with a-c unit; then d.
class BeauvilleEnumerator {
 public:
  // Throws LevelError unless is_valid_level(n).
  explicit BeauvilleEnumerator(std::uint32_t n);

  std::uint32_t n() const { return units_.modulus(); }
  const UnitTable& units() const { return units_; }

  // Members with first entry `a`, in lexicographic order.
  template <class Visitor>
  void for_each_with_leading(std::uint32_t a, Visitor&& visit) const;

  template <class Visitor>
  void for_each(Visitor&& visit) const {
    for (std::uint32_t a = 0; a < n(); ++a) for_each_with_leading(a, visit);
  }

  // Slices are sharded by leading entry and concatenated in order.
  std::vector<BeauvilleMatrix> collect(unsigned threads = 1) const;
  Count count(unsigned threads = 1) const;

 private:
  UnitTable units_;
};

template <class Visitor>
void BeauvilleEnumerator::for_each_with_leading(std::uint32_t a, Visitor&& visit) const {
  const std::uint32_t n = this->n();
  const auto& u = units_;
  if (!u.is_unit(a)) return;
  const auto mod = [n](std::uint64_t x) { return static_cast<std::uint32_t>(x % n); };
  for (std::uint32_t b = 1; b < n; ++b) {
    if (!u.is_unit(b) || !u.is_unit(mod(a + b))) continue;
    for (std::uint32_t c = 1; c < n; ++c) {
      if (!u.is_unit(c) || !u.is_unit(mod(a + n - c))) continue;
      const std::uint32_t a_plus_b = mod(a + b);
      for (std::uint32_t d = 1; d < n; ++d) {
        if (!u.is_unit(d) || !u.is_unit(mod(c + d)) || !u.is_unit(mod(b + n - d))) continue;
        if (!u.is_unit(mod(a_plus_b + 2ull * n - c - d))) continue;
        const std::uint32_t determinant =
            mod(static_cast<std::uint64_t>(a) * d + static_cast<std::uint64_t>(n - b) * c);
        if (!u.is_unit(determinant)) continue;
        visit(BeauvilleMatrix(Mat2::from_normalized(n, a, b, c, d), BeauvilleMatrix::Trusted{}));
      }
    }
  }
}

std::vector<BeauvilleMatrix> enumerate_beauville(std::uint32_t n, unsigned threads = 1);
Count count_beauville(std::uint32_t n, unsigned threads = 1);

}  // namespace beauville
