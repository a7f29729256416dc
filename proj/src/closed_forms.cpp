#include "beauville/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "beauville/errors.hpp"

namespace beauville {

namespace {

Count power(Count base, unsigned exp) {
  Count out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

SignedCount signed_power(std::uint64_t base, unsigned exp) {
  SignedCount out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= static_cast<SignedCount>(base);
  return out;
}

void require_closed_form_level(std::uint64_t n) {
  require_valid_level(n);
  if (n > kClosedFormMax) {
    throw LevelError("n = " + std::to_string(n) + " exceeds the closed-form bound " + std::to_string(kClosedFormMax));
  }
}

void require_prime_power(std::uint64_t p, unsigned e) {
  if (p < 5 || !is_prime(p) || e < 1) {
    throw std::invalid_argument("expected a prime p >= 5 and e >= 1, got p = " + std::to_string(p) +
                                ", e = " + std::to_string(e));
  }
  if (power(p, e) > kClosedFormMax) {
    throw LevelError("p^e = " + std::to_string(p) + "^" + std::to_string(e) + " exceeds the closed-form bound");
  }
}

Count theta1_prime_power(std::uint64_t p, unsigned e) {
  return power(p, 4 * e - 4) * (p - 1) * (p - 2) * (p - 3) * (p - 4);
}

}  // namespace

Count theta1(std::uint64_t n) {
  require_closed_form_level(n);
  Count out = 1;
  for (const auto& pp : factorize(n)) out *= theta1_prime_power(pp.p, pp.e);
  return out;
}

Count theta2(std::uint64_t p, unsigned e) {
  require_prime_power(p, e);
  // a^2 + ab + b^2 has nonzero solutions mod p only when F_p holds a cube root of unity.
  const std::uint64_t removed = (p % 3 == 2) ? 2 : 4;
  return power(p, 2 * e - 2) * (p - 1) * (p - removed);
}

Count theta3(std::uint64_t p, unsigned e) {
  require_prime_power(p, e);
  return power(p, 2 * e - 2) * (p - 3) * (p - 5);
}

Count theta4(std::uint64_t p, unsigned e) {
  require_prime_power(p, e);
  // Solutions of -3 a^2 = 1 mod p^e: two when -3 is a square mod p, i.e. p = 1 mod 3.
  return (p % 3 == 1) ? 2 : 0;
}

ThetaBreakdown theta(std::uint64_t n) {
  require_closed_form_level(n);
  ThetaBreakdown out;
  out.n = n;
  out.theta1 = 1;
  out.theta2_prod = 1;
  out.theta3_prod = 1;
  out.theta4_prod = 1;
  for (const auto& pp : factorize(n)) {
    out.theta1 *= theta1_prime_power(pp.p, pp.e);
    out.theta2_prod *= theta2(pp.p, pp.e);
    out.theta3_prod *= theta3(pp.p, pp.e);
    out.theta4_prod *= theta4(pp.p, pp.e);
  }
  const Count bracket = out.bracket();
  if (bracket % 72 != 0) {
    throw InternalInconsistency("Burnside bracket " + to_string(bracket) + " for n = " + std::to_string(n) +
                                " is not divisible by 72");
  }
  out.theta = bracket / 72;
  return out;
}

Count theta_prime_power(std::uint64_t p, unsigned e) {
  require_prime_power(p, e);
  const auto P = [p](unsigned k) { return signed_power(p, k); };
  const unsigned q = 4 * e, h = 2 * e;
  SignedCount value = P(q) - 10 * P(q - 1) + 35 * P(q - 2) - 50 * P(q - 3) + 24 * P(q - 4) + 10 * P(h);
  if (p % 3 == 2) {
    value += -60 * P(h - 1) + 98 * P(h - 2);
  } else {
    value += -68 * P(h - 1) + 106 * P(h - 2) + 24;
  }
  if (value < 0 || value % 72 != 0) {
    throw InternalInconsistency("prime-power polynomial at p = " + std::to_string(p) + ", e = " + std::to_string(e) +
                                " gives " + to_string(value) + ", not a nonnegative multiple of 72");
  }
  return static_cast<Count>(value / 72);
}

bool less_than(const ExactRatio& lhs, const ExactRatio& rhs) {
  // Continued-fraction comparison; never forms a product, so no overflow.
  Count a = lhs.numerator, b = lhs.denominator, c = rhs.numerator, d = rhs.denominator;
  if (b == 0 || d == 0) throw std::invalid_argument("less_than: zero denominator");
  for (;;) {
    const Count q1 = a / b, q2 = c / d;
    if (q1 != q2) return q1 < q2;
    const Count r1 = a % b, r2 = c % d;
    if (r1 == 0 || r2 == 0) return r1 == 0 && r2 != 0;
    // r1/b < r2/d  <=>  d/r2 < b/r1
    a = d;
    c = b;
    b = r2;
    d = r1;
  }
}

ExactRatio asymptotic_ratio(std::uint64_t n) {
  const ThetaBreakdown t = theta(n);
  return {72 * t.theta, power(n, 4)};
}

ExactRatio density(std::uint64_t n) { return {theta1(n), power(n, 4)}; }

std::uint64_t fermat_genus(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("fermat_genus: n must be positive");
  return (n - 1) * (n - 2) / 2;
}

}  // namespace beauville
