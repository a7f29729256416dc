#include "beauville/modular.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>
#include <stdexcept>

#include "beauville/errors.hpp"

namespace beauville {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(SignedCount value) {
  if (value < 0) return "-" + to_string(static_cast<Count>(-value));
  return to_string(static_cast<Count>(value));
}

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

Modulus::Modulus(std::uint64_t n) {
  if (n == 0 || n > 0xFFFFFFFFull) {
    throw std::invalid_argument("modulus must lie in [1, 2^32), got " + std::to_string(n));
  }
  n_ = static_cast<std::uint32_t>(n);
}

std::vector<PrimePower> Modulus::factorization() const { return factorize(n_); }

Residue::Residue(std::int64_t value, Modulus modulus) : n_(modulus.value()) {
  std::int64_t r = value % static_cast<std::int64_t>(n_);
  if (r < 0) r += n_;
  value_ = static_cast<std::uint32_t>(r);
}

bool Residue::is_unit() const { return std::gcd(value_, n_) == 1; }

Residue Residue::inverse() const {
  if (!is_unit()) {
    throw std::domain_error(std::to_string(value_) + " is not a unit mod " + std::to_string(n_));
  }
  return Residue(static_cast<std::int64_t>(inverse_mod(value_, n_)), Modulus(n_));
}

namespace {

void check_same(std::uint32_t n, std::uint32_t m) {
  if (n != m) {
    throw ModulusMismatch("residues mod " + std::to_string(n) + " and mod " + std::to_string(m));
  }
}

}  // namespace

Residue Residue::operator+(const Residue& other) const {
  check_same(n_, other.n_);
  return Residue(static_cast<std::int64_t>(value_) + other.value_, Modulus(n_));
}

Residue Residue::operator-(const Residue& other) const {
  check_same(n_, other.n_);
  return Residue(static_cast<std::int64_t>(value_) - other.value_, Modulus(n_));
}

Residue Residue::operator*(const Residue& other) const {
  check_same(n_, other.n_);
  const std::uint64_t product = static_cast<std::uint64_t>(value_) * other.value_ % n_;
  return Residue(static_cast<std::int64_t>(product), Modulus(n_));
}

Residue Residue::operator-() const { return Residue(-static_cast<std::int64_t>(value_), Modulus(n_)); }

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.e;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  const auto f = factorize(std::max<std::uint64_t>(n, 1));
  return f.size() == 1 && f.front().e == 1;
}

bool is_valid_level(std::uint64_t n) { return n >= 5 && std::gcd<std::uint64_t>(n, 6) == 1; }

void require_valid_level(std::uint64_t n) {
  if (is_valid_level(n)) return;
  if (n < 5 && std::gcd<std::uint64_t>(n, 6) == 1) {
    throw LevelError("n = " + std::to_string(n) + " is not a Beauville level: n must be at least 5");
  }
  throw LevelError("n = " + std::to_string(n) + " is not a Beauville level: gcd(n, 6) = " +
                   std::to_string(std::gcd<std::uint64_t>(n, 6)) + ", must be 1");
}

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(x % n), r = static_cast<std::int64_t>(n);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return 0;
  old_s %= static_cast<std::int64_t>(n);
  if (old_s < 0) old_s += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(old_s);
}

Residue crt_combine(std::span<const CrtPart> parts) {
  std::vector<std::uint64_t> primes;
  std::uint64_t modulus = 1;
  for (const auto& part : parts) {
    if (part.residue.modulus().value() != part.prime_power.value()) {
      throw std::invalid_argument("crt_combine: residue modulus " +
                                  std::to_string(part.residue.modulus().value()) +
                                  " does not match prime power " +
                                  std::to_string(part.prime_power.value()));
    }
    if (std::find(primes.begin(), primes.end(), part.prime_power.p) != primes.end()) {
      throw std::invalid_argument("crt_combine: repeated prime " + std::to_string(part.prime_power.p));
    }
    primes.push_back(part.prime_power.p);
    modulus *= part.prime_power.value();
  }
  // Garner-free form: x = sum r_i * M_i * (M_i^{-1} mod m_i), M_i = M / m_i.
  unsigned __int128 x = 0;
  for (const auto& part : parts) {
    const std::uint64_t m = part.prime_power.value();
    const std::uint64_t big = modulus / m;
    const std::uint64_t inv = inverse_mod(big % m, m);
    x += static_cast<unsigned __int128>(part.residue.value()) * big % modulus * inv % modulus;
    x %= modulus;
  }
  return Residue(static_cast<std::int64_t>(x), Modulus(modulus));
}

std::vector<CrtPart> crt_split(const Residue& x) {
  std::vector<CrtPart> parts;
  for (const auto& pp : factorize(x.modulus().value())) {
    const std::uint64_t m = pp.value();
    parts.push_back({Residue(static_cast<std::int64_t>(x.value() % m), Modulus(m)), pp});
  }
  return parts;
}

UnitTable::UnitTable(std::uint32_t n) : n_(n), unit_(n, 0), inverse_(n, 0) {
  if (n == 0) throw std::invalid_argument("UnitTable: n must be positive");
  for (std::uint32_t x = 0; x < n; ++x) {
    if (std::gcd(x, n) != 1) continue;
    unit_[x] = 1;
    inverse_[x] = static_cast<std::uint32_t>(inverse_mod(x, n));
  }
}

}  // namespace beauville
