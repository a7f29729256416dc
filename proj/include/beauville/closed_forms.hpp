#pragma once

// Exact closed forms for |F_n|, the per-class fixed-point counts, the number of
// isomorphism classes Theta(n), and the prime-power polynomials. Everything is
// evaluated as integer products over prime powers: a factor (1 - k/p) becomes (p - k)
// with the power of p lowered by one.

#include <cstdint>

#include "beauville/modular.hpp"

namespace beauville {

// Closed forms accept valid levels up to this bound (prime cubes up to 199^3 fit).
inline constexpr std::uint64_t kClosedFormMax = std::uint64_t{1} << 24;

struct ThetaBreakdown {
  std::uint64_t n = 0;
  Count theta1 = 0;       // |F_n|, fixed by the identity
  Count theta2_prod = 0;  // prod Theta2(p^e), class 5 (order 3, both coordinates moved)
  Count theta3_prod = 0;  // prod Theta3(p^e), class 7 (J)
  Count theta4_prod = 0;  // prod Theta4(p^e), class 9 (order 6, swapping)
  Count theta = 0;

  // theta1 + 4 theta2_prod + 6 theta3_prod + 12 theta4_prod == 72 theta.
  Count bracket() const { return theta1 + 4 * theta2_prod + 6 * theta3_prod + 12 * theta4_prod; }

  bool operator==(const ThetaBreakdown&) const = default;
};

// prod p^(4e-4) (p-1)(p-2)(p-3)(p-4). Throws LevelError for invalid or oversized n.
Count theta1(std::uint64_t n);

// Throw std::invalid_argument unless p >= 5 is prime and e >= 1.
Count theta2(std::uint64_t p, unsigned e);
Count theta3(std::uint64_t p, unsigned e);
Count theta4(std::uint64_t p, unsigned e);

// Throws InternalInconsistency if 72 does not divide the bracket.
ThetaBreakdown theta(std::uint64_t n);

// The two degree-4e polynomials in p, split by p mod 3, evaluated literally.
Count theta_prime_power(std::uint64_t p, unsigned e);

struct ExactRatio {
  Count numerator = 0;
  Count denominator = 1;

  bool operator==(const ExactRatio&) const = default;
  double approx() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

// a/b < c/d by cross multiplication.
bool less_than(const ExactRatio& lhs, const ExactRatio& rhs);

// (72 Theta(n), n^4); tends to 1 along the primes.
ExactRatio asymptotic_ratio(std::uint64_t n);

// (theta1(n), n^4).
ExactRatio density(std::uint64_t n);

// Genus of the Fermat curve of degree n: (n-1)(n-2)/2.
std::uint64_t fermat_genus(std::uint64_t n);

}  // namespace beauville
