#include "beauville/matrix.hpp"

#include <numeric>
#include <stdexcept>

#include "beauville/errors.hpp"

namespace beauville {

namespace {

std::uint32_t reduce(std::int64_t x, std::uint32_t n) {
  std::int64_t r = x % static_cast<std::int64_t>(n);
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

bool unit(std::int64_t x, std::uint32_t n) { return std::gcd(reduce(x, n), n) == 1; }

}  // namespace

Mat2::Mat2(Modulus n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : n_(n.value()), e_{reduce(a, n_), reduce(b, n_), reduce(c, n_), reduce(d, n_)} {}

Mat2 Mat2::identity(Modulus n) { return Mat2(n, 1, 0, 0, 1); }

std::uint64_t Mat2::encode() const {
  std::uint64_t code = 0;
  for (auto x : e_) code = code * n_ + x;
  return code;
}

Mat2 Mat2::decode(Modulus n, std::uint64_t code) {
  const std::uint32_t m = n.value();
  std::array<std::uint32_t, 4> e{};
  for (int i = 3; i >= 0; --i) {
    e[i] = static_cast<std::uint32_t>(code % m);
    code /= m;
  }
  if (code != 0) throw std::invalid_argument("Mat2::decode: code out of range");
  return Mat2(m, e);
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  if (n_ != rhs.n_) {
    throw ModulusMismatch("matrix product mod " + std::to_string(n_) + " and mod " + std::to_string(rhs.n_));
  }
  const auto& [a, b, c, d] = e_;
  const auto& [p, q, r, s] = rhs.e_;
  auto dot = [this](std::uint64_t x1, std::uint64_t y1, std::uint64_t x2, std::uint64_t y2) {
    return static_cast<std::int64_t>((x1 * y1 + x2 * y2) % n_);
  };
  return Mat2(Modulus(n_), dot(a, p, b, r), dot(a, q, b, s), dot(c, p, d, r), dot(c, q, d, s));
}

std::string Mat2::to_string() const {
  return std::to_string(e_[0]) + " " + std::to_string(e_[1]) + " " + std::to_string(e_[2]) + " " +
         std::to_string(e_[3]);
}

Residue det(const Mat2& m) {
  const auto& [a, b, c, d] = m.entries();
  return Residue(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c, m.modulus());
}

bool is_invertible(const Mat2& m) { return det(m).is_unit(); }

Mat2 invert(const Mat2& m) {
  const Residue determinant = det(m);
  if (!determinant.is_unit()) {
    throw SingularMatrixError("matrix (" + m.to_string() + ") mod " + std::to_string(m.n()) +
                              " has non-unit determinant " + std::to_string(determinant.value()));
  }
  const std::int64_t inv = determinant.inverse().value();
  const auto& [a, b, c, d] = m.entries();
  const std::int64_t a_ = a, b_ = b, c_ = c, d_ = d;
  return Mat2(m.modulus(), d_ * inv, -b_ * inv, -c_ * inv, a_ * inv);
}

bool satisfies_free_action_units(const Mat2& m) {
  const std::uint32_t n = m.n();
  const std::int64_t a = m.entries()[0], b = m.entries()[1], c = m.entries()[2], d = m.entries()[3];
  for (std::int64_t q : {a, b, c, d, a + b, c + d, a - c, b - d, a + b - c - d}) {
    if (!unit(q, n)) return false;
  }
  return true;
}

bool is_beauville_matrix(const Mat2& m) { return satisfies_free_action_units(m) && is_invertible(m); }

bool is_beauville_matrix(const UnitTable& units, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                         std::uint32_t d) {
  const std::uint32_t n = units.modulus();
  const std::int64_t sa = a, sb = b, sc = c, sd = d;
  for (std::int64_t q : {sa, sb, sc, sd, sa + sb, sc + sd, sa - sc, sb - sd, sa + sb - sc - sd, sa * sd - sb * sc}) {
    if (!units.is_unit(reduce(q, n))) return false;
  }
  return true;
}

BeauvilleMatrix::BeauvilleMatrix(const Mat2& m) : m_(m) {
  if (!is_beauville_matrix(m)) {
    throw std::invalid_argument("matrix (" + m.to_string() + ") mod " + std::to_string(m.n()) +
                                " does not define a Beauville structure");
  }
}

std::optional<BeauvilleMatrix> BeauvilleMatrix::certify(const Mat2& m) {
  if (!is_beauville_matrix(m)) return std::nullopt;
  return BeauvilleMatrix(m, Trusted{});
}

bool GeneratorTriple::sums_to_zero() const {
  std::uint64_t x = 0, y = 0;
  for (const auto& v : entries) {
    x += v.x;
    y += v.y;
  }
  return x % n == 0 && y % n == 0;
}

GeneratorTriple standard_triple(std::uint32_t n) {
  return {n, {Vec2{1 % n, 0}, Vec2{0, 1 % n}, Vec2{n - 1, n - 1}}};
}

TriplePair triples_of(const Mat2& m) {
  const std::uint32_t n = m.n();
  const auto& [a, b, c, d] = m.entries();
  const auto neg_sum = [n](std::uint32_t x, std::uint32_t y) {
    return static_cast<std::uint32_t>((2ull * n - x - y) % n);
  };
  return {standard_triple(n), {n, {Vec2{a, c}, Vec2{b, d}, Vec2{neg_sum(a, b), neg_sum(c, d)}}}};
}

TriplePair triples_of(const BeauvilleMatrix& m) { return triples_of(m.matrix()); }

BeauvilleEnumerator::BeauvilleEnumerator(std::uint32_t n)
    : units_((require_valid_level(n), n)) {}

std::vector<BeauvilleMatrix> BeauvilleEnumerator::collect(unsigned threads) const {
  auto slices = detail::run_sharded<std::vector<BeauvilleMatrix>>(n(), threads, [this](std::size_t a) {
    std::vector<BeauvilleMatrix> out;
    for_each_with_leading(static_cast<std::uint32_t>(a), [&](const BeauvilleMatrix& m) { out.push_back(m); });
    return out;
  });
  std::vector<BeauvilleMatrix> all;
  for (auto& slice : slices) all.insert(all.end(), slice.begin(), slice.end());
  return all;
}

Count BeauvilleEnumerator::count(unsigned threads) const {
  const auto slices = detail::run_sharded<Count>(n(), threads, [this](std::size_t a) {
    Count c = 0;
    for_each_with_leading(static_cast<std::uint32_t>(a), [&](const BeauvilleMatrix&) { ++c; });
    return c;
  });
  return std::accumulate(slices.begin(), slices.end(), Count{0});
}

std::vector<BeauvilleMatrix> enumerate_beauville(std::uint32_t n, unsigned threads) {
  return BeauvilleEnumerator(n).collect(threads);
}

Count count_beauville(std::uint32_t n, unsigned threads) { return BeauvilleEnumerator(n).count(threads); }

}  // namespace beauville
