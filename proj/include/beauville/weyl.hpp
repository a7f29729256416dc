#pragma once

// The order-72 group W = S3 wr S2 = (S3 x S3) x| <J> acting on F_n, its conjugacy
// classes, and the matrix representation M: S3 -> GL2(Z_n).
//
// Conventions: permutations act on {1,2,3}, products compose right to left
// ((s*t)(i) = s(t(i))), sigma1 = (1,3,2) and sigma2 = (1,2). M is fixed by
// M(sigma1) = (-1 1; -1 0) and M(sigma2) = (0 1; 1 0) and extended multiplicatively.
// A relabeling of S3 only permutes group elements, so the orbits do not depend on it.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "beauville/matrix.hpp"

namespace beauville {

class Perm3 {
 public:
  constexpr Perm3() = default;
  // 1-based images (image[0] = where 1 goes). Throws std::invalid_argument unless a bijection.
  static Perm3 from_images(std::array<int, 3> images);

  static constexpr Perm3 identity() { return Perm3(); }
  static Perm3 sigma1() { return from_images({3, 1, 2}); }  // (1,3,2): 1->3->2->1
  static Perm3 sigma2() { return from_images({2, 1, 3}); }  // (1,2)
  static const std::array<Perm3, 6>& all();

  // 1-based.
  int operator()(int point) const { return img_[point - 1] + 1; }
  Perm3 operator*(const Perm3& rhs) const;
  Perm3 inverse() const;
  int order() const;
  bool is_identity() const { return *this == Perm3(); }
  // Position in all(), 0..5.
  unsigned index() const;
  // Cycle notation, "Id" for the identity.
  std::string to_string() const;

  auto operator<=>(const Perm3&) const = default;

 private:
  std::array<std::uint8_t, 3> img_{0, 1, 2};
};

// (tau1, tau2) composed with J when eps = -1. tau1 acts on the first factor.
struct WElement {
  Perm3 tau1;
  Perm3 tau2;
  int eps = +1;

  static WElement identity() { return {}; }
  static WElement J() { return {Perm3(), Perm3(), -1}; }

  bool swaps_factors() const { return eps < 0; }
  // Position in WeylGroup::elements(), 0..71.
  unsigned index() const;
  std::string to_string() const;

  auto operator<=>(const WElement&) const = default;
};

// (s1,s2,+1)(t1,t2,e) = (s1 t1, s2 t2, e); (s1,s2,-1)(t1,t2,e) = (s1 t2, s2 t1, -e).
WElement w_mul(const WElement& x, const WElement& y);
inline WElement operator*(const WElement& x, const WElement& y) { return w_mul(x, y); }
WElement w_inverse(const WElement& x);
int w_order(const WElement& x);

struct ConjClassId {
  int index = 0;  // 1..9 in the standard table order
  int order = 0;
  int size = 0;

  bool operator==(const ConjClassId&) const = default;
};

// The group as an immutable multiplication table. Conjugacy classes are computed by
// conjugation closure and then labeled by (eps, element order, trivial coordinate).
class WeylGroup {
 public:
  static constexpr unsigned kOrder = 72;
  static constexpr int kClassCount = 9;

  static const WeylGroup& instance();

  const std::array<WElement, kOrder>& elements() const { return elements_; }
  const WElement& element(unsigned i) const { return elements_[i]; }
  unsigned mul(unsigned i, unsigned j) const { return mul_[i][j]; }
  unsigned inverse(unsigned i) const { return inv_[i]; }
  ConjClassId class_of(unsigned i) const { return classes_[class_index_[i] - 1]; }
  // Members of class k (1..9).
  const std::vector<unsigned>& class_members(int k) const { return class_members_[k - 1]; }
  // The representative listed for class k: (Id,Id), (Id,s2), (s2,s2), (Id,s3), (s3,s3),
  // (s2,s3), (Id,Id)J, (Id,s2)J, (s2,s3 s2)J with s3 = sigma1.
  WElement representative(int k) const;

  // Indices of the 36 factor-preserving elements.
  const std::vector<unsigned>& factor_preserving() const { return factor_preserving_; }
  std::vector<unsigned> all_indices() const;

  // Subgroup generated by the given element indices (sorted).
  std::vector<unsigned> closure(std::span<const unsigned> generators) const;
  // Conjugacy classes of a subgroup under its own conjugation, each sorted.
  std::vector<std::vector<unsigned>> conjugacy_classes(std::span<const unsigned> subgroup) const;
  bool is_abelian(std::span<const unsigned> subgroup) const;

 private:
  WeylGroup();

  std::array<WElement, kOrder> elements_;
  std::array<std::array<std::uint8_t, kOrder>, kOrder> mul_{};
  std::array<std::uint8_t, kOrder> inv_{};
  std::array<int, kOrder> class_index_{};
  std::array<ConjClassId, kClassCount> classes_{};
  std::array<std::vector<unsigned>, kClassCount> class_members_;
  std::vector<unsigned> factor_preserving_;
};

ConjClassId conjugacy_class_of(const WElement& w);

// M_tau over Z_n. Throws LevelError unless is_valid_level(n).
Mat2 m_rep(const Perm3& tau, std::uint32_t n);

// A' = M_tau2 A M_tau1^{-1} (eps = +1) or M_tau2 A^{-1} M_tau1^{-1} (eps = -1).
// A left action: act(x*y, A) = act(x, act(y, A)). Throws SingularMatrixError for a
// singular A when eps = -1, LevelError unless A's modulus is a valid level.
Mat2 act(const WElement& w, const Mat2& a);

// The same action precompiled for one modulus: each element becomes a 4x4 integer
// map applied to the entries of A (or of A^{-1} for factor-swapping elements).
class ActionTable {
 public:
  explicit ActionTable(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  const UnitTable& units() const { return units_; }

  // `inverse` must be invert(a) whenever element `w` swaps factors.
  std::array<std::uint32_t, 4> apply(unsigned w, const std::array<std::uint32_t, 4>& a,
                                     const std::array<std::uint32_t, 4>& inverse) const;
  std::array<std::uint32_t, 4> inverse_of(const std::array<std::uint32_t, 4>& a) const;
  bool swaps(unsigned w) const { return swaps_[w]; }

 private:
  std::uint32_t n_;
  UnitTable units_;
  std::array<std::array<std::array<std::int8_t, 4>, 4>, WeylGroup::kOrder> coeff_{};
  std::array<bool, WeylGroup::kOrder> swaps_{};
};

}  // namespace beauville
