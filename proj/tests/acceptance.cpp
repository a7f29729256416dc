// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "beauville/classifier.hpp"
#include "beauville/closed_forms.hpp"
#include "beauville/oracle.hpp"

using namespace beauville;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_ms <= 0 || ms < limit_ms;
  const bool ok = o.passed && in_time;
  failures += !ok;
  std::printf("[%s] %2d %s: %s (%.3f ms", ok ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), ms);
  if (limit_ms > 0) std::printf(", limit %.0f ms", limit_ms);
  std::printf(")%s\n", in_time ? "" : " TOO SLOW");
  std::fflush(stdout);
}

Count power(Count base, unsigned e) {
  Count out = 1;
  while (e-- > 0) out *= base;
  return out;
}

std::vector<std::uint32_t> agreement_levels() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 5; n <= 55; ++n)
    if (is_valid_level(n)) out.push_back(n);
  for (std::uint32_t n : {65u, 77u, 91u}) out.push_back(n);
  return out;
}

// Fixed counts of one representative per class, filled by criterion 3 and reused by 4.
std::map<std::uint32_t, std::array<Count, 10>> g_fixed;

Count burnside(std::uint32_t n) {
  const auto& g = WeylGroup::instance();
  std::array<Count, 10> fixed{};
  Count sum = 0;
  for (int k = 1; k <= WeylGroup::kClassCount; ++k) {
    fixed[k] = fixed_count(g.representative(k), n);
    sum += static_cast<Count>(g.class_members(k).size()) * fixed[k];
  }
  g_fixed[n] = fixed;
  if (sum % WeylGroup::kOrder != 0) throw std::logic_error("Burnside sum not divisible at n=" + std::to_string(n));
  return sum / WeylGroup::kOrder;
}

}  // namespace

int main() {
  criterion(1, "|F_5| = 24 by exhaustive scan and by formula", 1, [] {
    std::size_t scanned = 0;
    for (std::uint64_t code = 0; code < 625; ++code) scanned += is_beauville_matrix(Mat2::decode(Modulus(5), code));
    const bool ok = scanned == 24 && theta1(5) == 24;
    return Outcome{ok, "scan " + std::to_string(scanned) + ", formula " + to_string(theta1(5))};
  });

  criterion(2, "Theta(5) = 1 by formula, Burnside and union-find; one orbit of size 24 with Z3", 10, [] {
    const Count closed = theta(5).theta;
    const Count b = burnside(5);
    const Count uf = oracle::naive_orbit_count(5);
    const auto report = orbits(5);
    const bool ok = closed == 1 && b == 1 && uf == 1 && report.orbit_classes.size() == 1 &&
                    report.orbit_classes[0].orbit_size == 24 &&
                    report.orbit_classes[0].stabilizer_type == StabilizerType::Z3;
    return Outcome{ok, "formula " + to_string(closed) + ", Burnside " + to_string(b) + ", union-find " + to_string(uf) +
                           ", stabilizer " + std::string(to_string(report.orbit_classes[0].stabilizer_type))};
  });

  criterion(3, "theta = Burnside = union-find for valid n <= 55 and n in {65, 77, 91}", 60000, [] {
    const std::map<std::uint32_t, Count> anchors{{7, 7}, {11, 79}, {13, 178}, {25, 225}, {35, 132}};
    std::size_t levels = 0;
    for (std::uint32_t n : agreement_levels()) {
      const Count closed = theta(n).theta;
      const Count b = burnside(n);
      const Count uf = oracle::naive_orbit_count(n);
      if (closed != b || closed != uf) {
        return Outcome{false, "n=" + std::to_string(n) + ": " + to_string(closed) + " / " + to_string(b) + " / " +
                                  to_string(uf)};
      }
      if (const auto it = anchors.find(n); it != anchors.end() && it->second != closed) {
        return Outcome{false, "anchor n=" + std::to_string(n) + " gave " + to_string(closed)};
      }
      ++levels;
    }
    return Outcome{true, std::to_string(levels) + " levels agree; anchors 7, 79, 178, 225, 132 hold"};
  });

  criterion(4, "classes 2,3,4,6,8 fix nothing; classes 5,7,9 match the prime-power products", 0, [] {
    if (g_fixed.empty()) return Outcome{false, "no fixed counts were computed"};
    for (const auto& [n, fixed] : g_fixed) {
      const auto t = theta(n);
      for (int k : {2, 3, 4, 6, 8}) {
        if (fixed[k] != 0) return Outcome{false, "n=" + std::to_string(n) + " class " + std::to_string(k)};
      }
      if (fixed[1] != t.theta1 || fixed[5] != t.theta2_prod || fixed[7] != t.theta3_prod || fixed[9] != t.theta4_prod) {
        return Outcome{false, "n=" + std::to_string(n) + " products differ"};
      }
    }
    return Outcome{true, std::to_string(g_fixed.size()) + " levels"};
  });

  criterion(5, "prime-power polynomials equal the product form for 5 <= p <= 199, e <= 3", 1000, [] {
    std::size_t checked = 0;
    for (std::uint64_t p = 5; p <= 199; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned e = 1; e <= 3; ++e) {
        if (theta_prime_power(p, e) != theta(power(p, e)).theta) {
          return Outcome{false, "p=" + std::to_string(p) + " e=" + std::to_string(e)};
        }
        ++checked;
      }
    }
    return Outcome{true, std::to_string(checked) + " prime powers"};
  });

  criterion(6, "theta1/72 <= theta <= theta1/6 and 72 | bracket for valid n <= 10^4", 10000, [] {
    std::size_t checked = 0;
    for (std::uint64_t n = 5; n <= 10000; ++n) {
      if (!is_valid_level(n)) continue;
      const auto t = theta(n);
      if (t.bracket() != 72 * t.theta || t.theta1 > 72 * t.theta || 6 * t.theta > t.theta1) {
        return Outcome{false, "n=" + std::to_string(n)};
      }
      ++checked;
    }
    return Outcome{true, std::to_string(checked) + " levels"};
  });

  criterion(7, "stabilizer types obey the divisibility constraints for valid n <= 55", 0, [] {
    std::map<StabilizerType, Count> seen;
    for (std::uint32_t n = 5; n <= 55; ++n) {
      if (!is_valid_level(n)) continue;
      bool minus_one_prime = false;
      for (const auto& pp : factorize(n)) minus_one_prime |= pp.p % 3 == 2;
      for (const auto& c : orbits(n).orbit_classes) {
        const auto t = c.stabilizer_type;
        ++seen[t];
        if (minus_one_prime && t == StabilizerType::Z6) return Outcome{false, "Z6 at n=" + std::to_string(n)};
        if (n % 5 == 0 && t != StabilizerType::Trivial && t != StabilizerType::Z3) {
          return Outcome{false, std::string(to_string(t)) + " at n=" + std::to_string(n)};
        }
      }
    }
    std::string detail = "orbits by type:";
    for (const auto& [t, count] : seen) detail += " " + std::string(to_string(t)) + "=" + to_string(count);
    return Outcome{true, detail};
  });

  criterion(8, "factor-preserving orbits at n = 5 number 2, full orbits 1", 0, [] {
    const Count unswapped = orbits_unswapped(5);
    const Count full = orbits(5).theta;
    return Outcome{unswapped == 2 && full == 1, "unswapped " + to_string(unswapped) + ", full " + to_string(full)};
  });

  criterion(9, "membership = conditions (i)-(iii) = fixer-class freeness on GL2(Z_n), n in {5,7,11,13}", 30000, [] {
    std::size_t tested = 0;
    for (std::uint32_t n : {5u, 7u, 11u, 13u}) {
      for (std::uint64_t code = 0; code < std::uint64_t{n} * n * n * n; ++code) {
        const Mat2 x = Mat2::decode(Modulus(n), code);
        if (!is_invertible(x)) continue;
        const bool main = is_beauville_matrix(x);
        if (oracle::beauville_condition_check(x) != main || oracle::free_action_check(x) != main) {
          return Outcome{false, "disagreement at (" + x.to_string() + ") mod " + std::to_string(n)};
        }
        ++tested;
      }
    }
    return Outcome{true, std::to_string(tested) + " invertible matrices"};
  });

  criterion(10, "72 Theta(p)/p^4 in [0.85, 1) and increasing for primes 97..199; density >= 24/625", 1000, [] {
    const ExactRatio low{85, 100}, one{1, 1}, bound{24, 625};
    std::optional<ExactRatio> previous;
    std::string detail;
    for (std::uint64_t p = 97; p <= 199; ++p) {
      if (!is_prime(p)) continue;
      const ExactRatio r = asymptotic_ratio(p);
      if (less_than(r, low) || !less_than(r, one)) return Outcome{false, "p=" + std::to_string(p) + " out of range"};
      if (previous && !less_than(*previous, r)) return Outcome{false, "not increasing at p=" + std::to_string(p)};
      if (!previous) detail = "ratio(97) = " + std::to_string(r.approx());
      previous = r;
    }
    detail += ", ratio(199) = " + std::to_string(previous->approx());
    for (std::uint64_t p = 5; p <= 199; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned e = 1; e <= 3; ++e) {
        if (less_than(density(power(p, e)), bound)) return Outcome{false, "density below bound at p=" + std::to_string(p)};
      }
    }
    return Outcome{true, detail};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
