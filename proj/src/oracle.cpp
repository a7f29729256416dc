#include "beauville/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "beauville/errors.hpp"

namespace beauville::oracle {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
  }

  std::size_t components() {
    std::size_t roots = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i) roots += find(i) == i;
    return roots;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

Vec2 add(Vec2 u, Vec2 v, std::uint32_t n) { return {(u.x + v.x) % n, (u.y + v.y) % n}; }

void require_generators_span_w() {
  static const bool checked = [] {
    const auto& group = WeylGroup::instance();
    std::vector<unsigned> indices;
    for (const auto& g : generator_elements()) indices.push_back(g.index());
    if (group.closure(indices).size() != WeylGroup::kOrder) {
      throw InternalInconsistency("oracle generators do not generate W");
    }
    return true;
  }();
  (void)checked;
}

Count count_components(std::uint32_t n, std::size_t generator_count) {
  require_valid_level(n);
  if (n > kNaiveMax) {
    throw BudgetError("naive orbit count is limited to n <= " + std::to_string(kNaiveMax) + ", got " +
                      std::to_string(n));
  }
  require_generators_span_w();

  // Full n^4 scan. index_of maps a code to its position in F_n, or kAbsent.
  constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;
  const UnitTable units(n);
  const std::uint64_t n4 = std::uint64_t{n} * n * n * n;
  std::vector<std::uint32_t> index_of(n4, kAbsent);
  std::vector<std::uint64_t> codes;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d)
          if (is_beauville_matrix(units, a, b, c, d)) {
            const std::uint64_t code = Mat2::from_normalized(n, a, b, c, d).encode();
            index_of[code] = static_cast<std::uint32_t>(codes.size());
            codes.push_back(code);
          }

  const Modulus modulus(n);
  UnionFind components(codes.size());
  for (std::uint32_t i = 0; i < codes.size(); ++i) {
    const auto images = generator_images(Mat2::decode(modulus, codes[i]));
    for (std::size_t g = 0; g < generator_count; ++g) {
      const std::uint32_t j = index_of[images[g].encode()];
      if (j == kAbsent) {
        throw InternalInconsistency("generator image of (" + Mat2::decode(modulus, codes[i]).to_string() +
                                    ") left F_n");
      }
      components.unite(i, j);
    }
  }
  return components.components();
}

}  // namespace

std::size_t SigmaSet::size() const { return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true)); }

std::vector<Vec2> SigmaSet::elements() const {
  std::vector<Vec2> out;
  for (std::uint32_t x = 0; x < n_; ++x)
    for (std::uint32_t y = 0; y < n_; ++y)
      if (contains({x, y})) out.push_back({x, y});
  return out;
}

SigmaSet SigmaSet::intersection(const SigmaSet& other) const {
  SigmaSet out(n_);
  for (std::size_t i = 0; i < member_.size(); ++i) out.member_[i] = member_[i] && other.member_[i];
  return out;
}

std::uint32_t element_order(Vec2 v, std::uint32_t n) {
  std::uint32_t k = 1;
  for (Vec2 w = v; w.x != 0 || w.y != 0; w = add(w, v, n)) ++k;
  return k;
}

SigmaSet sigma_set(const GeneratorTriple& t) {
  SigmaSet out(t.n);
  for (const Vec2& g : t.entries) {
    Vec2 w{0, 0};
    do {
      out.insert(w);
      w = add(w, g, t.n);
    } while (w.x != 0 || w.y != 0);
  }
  return out;
}

bool generates(const GeneratorTriple& t) {
  const std::uint32_t n = t.n;
  SigmaSet reached(n);
  std::vector<Vec2> frontier{{0, 0}};
  reached.insert({0, 0});
  std::size_t count = 1;
  while (!frontier.empty()) {
    const Vec2 v = frontier.back();
    frontier.pop_back();
    for (const Vec2& g : t.entries) {
      const Vec2 w = add(v, g, n);
      if (reached.contains(w)) continue;
      reached.insert(w);
      ++count;
      frontier.push_back(w);
    }
  }
  return count == static_cast<std::size_t>(n) * n;
}

bool is_hyperbolic(const GeneratorTriple& t) {
  const std::uint64_t p = element_order(t.entries[0], t.n);
  const std::uint64_t q = element_order(t.entries[1], t.n);
  const std::uint64_t r = element_order(t.entries[2], t.n);
  // 1/p + 1/q + 1/r < 1  <=>  qr + pr + pq < pqr
  return q * r + p * r + p * q < p * q * r;
}

bool beauville_condition_check(const Mat2& m) {
  const TriplePair pair = triples_of(m);
  for (const auto* t : {&pair.first, &pair.second}) {
    if (!t->sums_to_zero() || !generates(*t) || !is_hyperbolic(*t)) return false;
  }
  return sigma_set(pair.first).intersection(sigma_set(pair.second)).size() == 1;
}

bool free_action_check(const Mat2& m) {
  if (!is_invertible(m)) {
    throw SingularMatrixError("free_action_check needs an invertible matrix, got (" + m.to_string() + ")");
  }
  const std::uint64_t n = m.n();
  const auto& [a, b, c, d] = m.entries();
  const auto fixes_second = [](std::uint64_t x, std::uint64_t y) { return x == 0 || y == 0 || x == y; };
  for (std::uint64_t k = 1; k < n; ++k) {
    // Images of (k,0), (0,k) and (k,k).
    if (fixes_second(a * k % n, c * k % n)) return false;
    if (fixes_second(b * k % n, d * k % n)) return false;
    if (fixes_second((a + b) * k % n, (c + d) * k % n)) return false;
  }
  return true;
}

const std::array<WElement, 5>& generator_elements() {
  static const std::array<WElement, 5> gens = [] {
    const Perm3 id = Perm3::identity(), s1 = Perm3::sigma1(), s2 = Perm3::sigma2();
    return std::array<WElement, 5>{
        WElement{s1, id, +1}, WElement{id, s1, +1}, WElement{s2, id, +1}, WElement{id, s2, +1}, WElement::J()};
  }();
  return gens;
}

std::array<Mat2, 5> generator_images(const Mat2& m) {
  const Modulus n = m.modulus();
  const std::int64_t a = m.entries()[0], b = m.entries()[1], c = m.entries()[2], d = m.entries()[3];
  return {Mat2(n, b, -a - b, d, -c - d), Mat2(n, c - a, d - b, -a, -b), Mat2(n, b, a, d, c), Mat2(n, c, d, a, b),
          invert(m)};
}

Count naive_orbit_count(std::uint32_t n) { return count_components(n, 5); }

Count naive_orbit_count_unswapped(std::uint32_t n) { return count_components(n, 4); }

}  // namespace beauville::oracle
