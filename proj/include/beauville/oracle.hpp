#pragma once

// Independent re-derivations used to cross-check the main path:
//   - the generator-triple conditions (i)-(iii) on Z_n^2 with literal Sigma-sets,
//   - the fixer-class freeness argument ((k,0), (0,k), (k,k) must map to non-fixers),
//   - a union-find orbit count over generator edges that never uses canonical forms.
// Single-threaded; nothing here is shared between calls.

#include <array>
#include <cstdint>
#include <vector>

#include "beauville/matrix.hpp"
#include "beauville/weyl.hpp"

namespace beauville::oracle {

// Largest level accepted by naive_orbit_count (its scan visits all n^4 matrices).
inline constexpr std::uint32_t kNaiveMax = 101;

// A subset of Z_n^2.
class SigmaSet {
 public:
  explicit SigmaSet(std::uint32_t n) : n_(n), member_(static_cast<std::size_t>(n) * n, false) {}

  std::uint32_t n() const { return n_; }
  void insert(Vec2 v) { member_[index(v)] = true; }
  bool contains(Vec2 v) const { return member_[index(v)]; }
  std::size_t size() const;
  std::vector<Vec2> elements() const;
  SigmaSet intersection(const SigmaSet& other) const;

 private:
  std::size_t index(Vec2 v) const { return static_cast<std::size_t>(v.x) * n_ + v.y; }

  std::uint32_t n_;
  std::vector<bool> member_;
};

// Smallest k >= 1 with k v = 0.
std::uint32_t element_order(Vec2 v, std::uint32_t n);

// <a> u <b> u <c>; conjugation is trivial in an abelian group.
SigmaSet sigma_set(const GeneratorTriple& t);

// The subgroup generated by the three entries is all of Z_n^2 (closure under addition).
bool generates(const GeneratorTriple& t);

// 1/ord(a) + 1/ord(b) + 1/ord(c) < 1, compared exactly.
bool is_hyperbolic(const GeneratorTriple& t);

// Both triples of triples_of(m) sum to zero, generate, are hyperbolic, and their
// Sigma-sets meet only in (0,0).
bool beauville_condition_check(const Mat2& m);

// No element fixing a point on the first curve ((k,0), (0,k), (k,k), k != 0) maps under m
// to an element fixing a point on the second. Throws SingularMatrixError for singular m.
bool free_action_check(const Mat2& m);

// The generators (s1,Id), (Id,s1), (s2,Id), (Id,s2) and J of W.
const std::array<WElement, 5>& generator_elements();

// Their effect on A, written out entrywise from the conjugation formulas rather than
// through the matrix representation:
//   (s1,Id): (b  -a-b; d  -c-d)      (Id,s1): (c-a  d-b; -a  -b)
//   (s2,Id): (b a; d c)              (Id,s2): (c d; a b)
//   J: A^{-1}
// Order matches generator_elements().
std::array<Mat2, 5> generator_images(const Mat2& m);

// Connected components of F_n under A -- g(A) for the five generators. Throws LevelError
// for invalid levels, BudgetError above kNaiveMax.
Count naive_orbit_count(std::uint32_t n);

// The same partition over the factor-preserving generators only.
Count naive_orbit_count_unswapped(std::uint32_t n);

}  // namespace beauville::oracle
