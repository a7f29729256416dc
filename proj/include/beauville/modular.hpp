#pragma once

// Exact arithmetic in Z/nZ: residues, units, prime-power factorization and CRT.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace beauville {

// Exact counts. Every closed-form value fits comfortably: n^4 * 72 < 2^103 for n <= 2^24.
using Count = unsigned __int128;
using SignedCount = __int128;

std::string to_string(Count value);
std::string to_string(SignedCount value);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;

  std::uint64_t value() const;
  auto operator<=>(const PrimePower&) const = default;
};

class Modulus {
 public:
  // Throws std::invalid_argument for n == 0 or n >= 2^32.
  explicit Modulus(std::uint64_t n);

  std::uint32_t value() const { return n_; }
  std::vector<PrimePower> factorization() const;

  auto operator<=>(const Modulus&) const = default;

 private:
  std::uint32_t n_;
};

// Residue class mod n, normalized to [0, n) at construction.
class Residue {
 public:
  Residue(std::int64_t value, Modulus modulus);

  std::uint32_t value() const { return value_; }
  Modulus modulus() const { return Modulus(n_); }

  bool is_unit() const;
  // Throws std::domain_error if not a unit.
  Residue inverse() const;

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator*(const Residue& other) const;
  Residue operator-() const;

  bool operator==(const Residue&) const = default;

 private:
  std::uint32_t value_;
  std::uint32_t n_;
};

// Trial division; primes strictly increasing, empty for n == 1.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// gcd(n, 6) == 1 and n >= 5.
bool is_valid_level(std::uint64_t n);

// Throws LevelError naming the gcd(n,6) failure when !is_valid_level(n).
void require_valid_level(std::uint64_t n);

// Modular inverse of x mod n; returns 0 when gcd(x, n) != 1 (and n > 1).
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t n);

struct CrtPart {
  Residue residue;  // modulus must equal prime_power.value()
  PrimePower prime_power;
};

// Combines residues modulo pairwise-coprime prime powers into one residue modulo
// their product. Throws std::invalid_argument on repeated primes or a residue whose
// modulus does not match its prime power.
Residue crt_combine(std::span<const CrtPart> parts);

// Inverse of crt_combine along factorize(x.modulus()).
std::vector<CrtPart> crt_split(const Residue& x);

// Unit lookup for hot loops: is_unit(x) for x in [0, n), plus inverses.
class UnitTable {
 public:
  explicit UnitTable(std::uint32_t n);

  std::uint32_t modulus() const { return n_; }
  bool is_unit(std::uint32_t x) const { return unit_[x] != 0; }
  // 0 for non-units.
  std::uint32_t inverse(std::uint32_t x) const { return inverse_[x]; }

 private:
  std::uint32_t n_;
  std::vector<std::uint8_t> unit_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace beauville
