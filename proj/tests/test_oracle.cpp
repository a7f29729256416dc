#include "beauville/classifier.hpp"
#include "beauville/errors.hpp"
#include "beauville/oracle.hpp"
#include "doctest.h"

using namespace beauville;
using namespace beauville::oracle;

namespace {

Mat2 m(std::uint64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Mat2(Modulus(n), a, b, c, d);
}

}  // namespace

TEST_CASE("sigma_set") {
  CHECK(sigma_set(standard_triple(5)).size() == 13);
  const GeneratorTriple t{5, {Vec2{1, 2}, Vec2{3, 4}, Vec2{1, 4}}};
  CHECK(sigma_set(t).size() == 13);
  const GeneratorTriple degenerate{7, {Vec2{0, 0}, Vec2{2, 3}, Vec2{5, 4}}};
  const auto s = sigma_set(degenerate);
  CHECK(s.size() == 7);
  for (std::uint32_t k = 0; k < 7; ++k) CHECK(s.contains({2 * k % 7, 3 * k % 7}));
}

TEST_CASE("element orders and hyperbolicity") {
  CHECK(element_order({0, 0}, 35) == 1);
  CHECK(element_order({5, 0}, 35) == 7);
  CHECK(element_order({5, 7}, 35) == 35);
  CHECK(is_hyperbolic(standard_triple(5)));
  // Orders (1, 5, 5): 1 + 1/5 + 1/5 > 1.
  CHECK_FALSE(is_hyperbolic({5, {Vec2{0, 0}, Vec2{1, 0}, Vec2{4, 0}}}));
  // Not a generating triple either.
  CHECK_FALSE(generates({5, {Vec2{0, 0}, Vec2{1, 0}, Vec2{4, 0}}}));
  CHECK(generates(standard_triple(7)));
}

TEST_CASE("beauville_condition_check examples") {
  CHECK(beauville_condition_check(m(5, 1, 3, 2, 4)));
  CHECK_FALSE(beauville_condition_check(Mat2::identity(Modulus(5))));
  CHECK(beauville_condition_check(m(5, 1, 2, 3, 4)));
}

TEST_CASE("free_action_check examples") {
  CHECK(free_action_check(m(5, 1, 3, 2, 4)));
  CHECK_FALSE(free_action_check(Mat2::identity(Modulus(5))));
  CHECK_THROWS_AS(free_action_check(m(5, 1, 1, 2, 2)), SingularMatrixError);
}

TEST_CASE("three-way equivalence on GL2(Z_n) for n in {5, 7}") {
  for (std::uint32_t n : {5u, 7u}) {
    std::size_t members = 0;
    for (std::uint64_t code = 0; code < std::uint64_t{n} * n * n * n; ++code) {
      const Mat2 x = Mat2::decode(Modulus(n), code);
      if (!is_invertible(x)) continue;
      const bool main = is_beauville_matrix(x);
      REQUIRE(beauville_condition_check(x) == main);
      REQUIRE(free_action_check(x) == main);
      members += main;
    }
    CHECK(members == count_beauville(n));
  }
}

TEST_CASE("hyperbolicity never decides membership") {
  // For every invertible matrix whose triples generate, both triples are hyperbolic.
  for (std::uint32_t n : {5u, 7u, 25u}) {
    for (std::uint64_t code = 0; code < std::uint64_t{n} * n * n * n; ++code) {
      const Mat2 x = Mat2::decode(Modulus(n), code);
      if (!is_invertible(x)) continue;
      const auto pair = triples_of(x);
      for (const auto* t : {&pair.first, &pair.second})
        if (generates(*t)) REQUIRE(is_hyperbolic(*t));
    }
  }
}

TEST_CASE("sigma sets of members have 3(p-1)+1 elements") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (const auto& a : enumerate_beauville(p)) {
      const auto pair = triples_of(a);
      REQUIRE(sigma_set(pair.first).size() == 3 * (p - 1) + 1);
      REQUIRE(sigma_set(pair.second).size() == 3 * (p - 1) + 1);
    }
  }
}

TEST_CASE("naive_orbit_count") {
  CHECK(naive_orbit_count(5) == 1);
  CHECK(naive_orbit_count(7) == 7);
  CHECK(naive_orbit_count(35) == 132);
  CHECK(naive_orbit_count_unswapped(5) == 2);
  CHECK(naive_orbit_count_unswapped(7) == 12);
  CHECK_THROWS_AS(naive_orbit_count(103), BudgetError);
  CHECK_THROWS_AS(naive_orbit_count(9), LevelError);
  for (std::uint32_t n = 5; n <= 31; ++n) {
    if (!is_valid_level(n)) continue;
    CHECK(naive_orbit_count(n) == orbits(n).theta);
    CHECK(naive_orbit_count_unswapped(n) == orbits_unswapped(n));
  }
}
