#include "beauville/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "beauville/errors.hpp"

namespace beauville {

namespace {

// Integer 2x2 matrices, row-major.
using IntMat = std::array<int, 4>;

IntMat int_mul(const IntMat& x, const IntMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

// M_tau over the integers, indexed by Perm3::index(). Built by walking words in the
// generators; a relation clash would mean M is not a homomorphism.
const std::array<IntMat, 6>& integer_rep() {
  static const std::array<IntMat, 6> table = [] {
    std::array<IntMat, 6> rep{};
    std::array<bool, 6> known{};
    const std::array<std::pair<Perm3, IntMat>, 2> generators{{
        {Perm3::sigma1(), IntMat{-1, 1, -1, 0}},
        {Perm3::sigma2(), IntMat{0, 1, 1, 0}},
    }};
    std::vector<Perm3> frontier{Perm3::identity()};
    rep[Perm3::identity().index()] = {1, 0, 0, 1};
    known[Perm3::identity().index()] = true;
    while (!frontier.empty()) {
      const Perm3 p = frontier.back();
      frontier.pop_back();
      for (const auto& [g, mg] : generators) {
        const Perm3 q = g * p;
        const IntMat mq = int_mul(mg, rep[p.index()]);
        if (known[q.index()]) {
          if (rep[q.index()] != mq) throw InternalInconsistency("M is not a homomorphism on S3");
          continue;
        }
        known[q.index()] = true;
        rep[q.index()] = mq;
        frontier.push_back(q);
      }
    }
    return rep;
  }();
  return table;
}

}  // namespace

Perm3 Perm3::from_images(std::array<int, 3> images) {
  Perm3 p;
  std::array<bool, 3> hit{};
  for (int i = 0; i < 3; ++i) {
    const int img = images[i];
    if (img < 1 || img > 3 || hit[img - 1]) throw std::invalid_argument("Perm3: images must be a bijection of {1,2,3}");
    hit[img - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(img - 1);
  }
  return p;
}

const std::array<Perm3, 6>& Perm3::all() {
  static const std::array<Perm3, 6> perms = [] {
    std::array<Perm3, 6> out{};
    std::array<int, 3> images{1, 2, 3};
    int i = 0;
    do {
      out[i++] = from_images(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return perms;
}

Perm3 Perm3::operator*(const Perm3& rhs) const {
  Perm3 out;
  for (int i = 0; i < 3; ++i) out.img_[i] = img_[rhs.img_[i]];
  return out;
}

Perm3 Perm3::inverse() const {
  Perm3 out;
  for (std::uint8_t i = 0; i < 3; ++i) out.img_[img_[i]] = i;
  return out;
}

int Perm3::order() const {
  int k = 1;
  for (Perm3 p = *this; !p.is_identity(); p = p * *this) ++k;
  return k;
}

unsigned Perm3::index() const {
  const auto& perms = all();
  return static_cast<unsigned>(std::find(perms.begin(), perms.end(), *this) - perms.begin());
}

std::string Perm3::to_string() const {
  if (is_identity()) return "Id";
  std::string out;
  std::array<bool, 3> seen{};
  for (int start = 0; start < 3; ++start) {
    if (seen[start] || img_[start] == start) continue;
    out += "(";
    for (int i = start; !seen[i]; i = img_[i]) {
      seen[i] = true;
      if (i != start) out += ",";
      out += std::to_string(i + 1);
    }
    out += ")";
  }
  return out;
}

unsigned WElement::index() const { return (eps > 0 ? 0u : 36u) + tau1.index() * 6 + tau2.index(); }

std::string WElement::to_string() const {
  return "(" + tau1.to_string() + "," + tau2.to_string() + (eps > 0 ? ")" : ")J");
}

WElement w_mul(const WElement& x, const WElement& y) {
  if (x.eps > 0) return {x.tau1 * y.tau1, x.tau2 * y.tau2, y.eps};
  return {x.tau1 * y.tau2, x.tau2 * y.tau1, -y.eps};
}

WElement w_inverse(const WElement& x) {
  if (x.eps > 0) return {x.tau1.inverse(), x.tau2.inverse(), +1};
  // (t1,t2,-1)(u1,u2,-1) = (t1 u2, t2 u1, +1) = identity.
  return {x.tau2.inverse(), x.tau1.inverse(), -1};
}

int w_order(const WElement& x) {
  int k = 1;
  for (WElement p = x; p != WElement::identity(); p = p * x) ++k;
  return k;
}

const WeylGroup& WeylGroup::instance() {
  static const WeylGroup group;
  return group;
}

WeylGroup::WeylGroup() {
  for (const auto& t1 : Perm3::all()) {
    for (const auto& t2 : Perm3::all()) {
      for (int eps : {+1, -1}) {
        const WElement w{t1, t2, eps};
        elements_[w.index()] = w;
      }
    }
  }
  for (unsigned i = 0; i < kOrder; ++i) {
    if (elements_[i].index() != i) throw InternalInconsistency("W element indexing");
    for (unsigned j = 0; j < kOrder; ++j) mul_[i][j] = static_cast<std::uint8_t>(w_mul(elements_[i], elements_[j]).index());
  }
  for (unsigned i = 0; i < kOrder; ++i) {
    for (unsigned j = 0; j < kOrder; ++j) {
      if (mul_[i][j] == 0) inv_[i] = static_cast<std::uint8_t>(j);
    }
    if (elements_[i].eps > 0) factor_preserving_.push_back(i);
  }

  // Conjugation orbits, then match each to its table row.
  const auto raw_classes = conjugacy_classes(all_indices());
  if (raw_classes.size() != static_cast<std::size_t>(kClassCount)) {
    throw InternalInconsistency("W has " + std::to_string(raw_classes.size()) + " conjugacy classes, expected 9");
  }
  for (const auto& members : raw_classes) {
    const WElement& w = elements_[members.front()];
    const int order = w_order(w);
    const bool trivial_coordinate = w.tau1.is_identity() || w.tau2.is_identity();
    int k = 0;
    if (w.eps > 0) {
      switch (order) {
        case 1: k = 1; break;
        case 2: k = trivial_coordinate ? 2 : 3; break;
        case 3: k = trivial_coordinate ? 4 : 5; break;
        case 6: k = 6; break;
        default: break;
      }
    } else {
      switch (order) {
        case 2: k = 7; break;
        case 4: k = 8; break;
        case 6: k = 9; break;
        default: break;
      }
    }
    if (k == 0 || !class_members_[k - 1].empty()) {
      throw InternalInconsistency("unexpected conjugacy class of W containing " + w.to_string());
    }
    class_members_[k - 1] = members;
    classes_[k - 1] = {k, order, static_cast<int>(members.size())};
    for (unsigned m : members) class_index_[m] = k;
  }
  for (int k = 1; k <= kClassCount; ++k) {
    if (class_of(representative(k).index()).index != k) {
      throw InternalInconsistency("class representative " + representative(k).to_string() + " misplaced");
    }
  }
}

WElement WeylGroup::representative(int k) const {
  const Perm3 id = Perm3::identity(), s2 = Perm3::sigma2(), s3 = Perm3::sigma1();
  switch (k) {
    case 1: return {id, id, +1};
    case 2: return {id, s2, +1};
    case 3: return {s2, s2, +1};
    case 4: return {id, s3, +1};
    case 5: return {s3, s3, +1};
    case 6: return {s2, s3, +1};
    case 7: return {id, id, -1};
    case 8: return {id, s2, -1};
    case 9: return {s2, s3 * s2, -1};
    default: throw std::out_of_range("conjugacy class index must be 1..9");
  }
}

std::vector<unsigned> WeylGroup::all_indices() const {
  std::vector<unsigned> out(kOrder);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

std::vector<unsigned> WeylGroup::closure(std::span<const unsigned> generators) const {
  std::set<unsigned> members{0};
  std::vector<unsigned> frontier{0};
  while (!frontier.empty()) {
    const unsigned x = frontier.back();
    frontier.pop_back();
    for (unsigned g : generators) {
      const unsigned y = mul(g, x);
      if (members.insert(y).second) frontier.push_back(y);
    }
  }
  return {members.begin(), members.end()};
}

std::vector<std::vector<unsigned>> WeylGroup::conjugacy_classes(std::span<const unsigned> subgroup) const {
  std::vector<std::vector<unsigned>> out;
  std::set<unsigned> assigned;
  for (unsigned x : subgroup) {
    if (assigned.count(x)) continue;
    std::set<unsigned> cls;
    for (unsigned g : subgroup) cls.insert(mul(mul(g, x), inverse(g)));
    assigned.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

bool WeylGroup::is_abelian(std::span<const unsigned> subgroup) const {
  for (unsigned x : subgroup) {
    for (unsigned y : subgroup) {
      if (mul(x, y) != mul(y, x)) return false;
    }
  }
  return true;
}

ConjClassId conjugacy_class_of(const WElement& w) { return WeylGroup::instance().class_of(w.index()); }

Mat2 m_rep(const Perm3& tau, std::uint32_t n) {
  require_valid_level(n);
  const IntMat& m = integer_rep()[tau.index()];
  return Mat2(Modulus(n), m[0], m[1], m[2], m[3]);
}

Mat2 act(const WElement& w, const Mat2& a) {
  const std::uint32_t n = a.n();
  const Mat2 source = w.swaps_factors() ? invert(a) : a;
  return m_rep(w.tau2, n) * source * m_rep(w.tau1.inverse(), n);
}

ActionTable::ActionTable(std::uint32_t n) : n_(n), units_((require_valid_level(n), n)) {
  const auto& group = WeylGroup::instance();
  for (unsigned w = 0; w < WeylGroup::kOrder; ++w) {
    swaps_[w] = group.element(w).swaps_factors();
    const IntMat& left = integer_rep()[group.element(w).tau2.index()];
    const IntMat& right = integer_rep()[group.element(w).tau1.inverse().index()];
    // out[i][k] = sum_{j,l} left[i][j] * X[j][l] * right[l][k]
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        for (int j = 0; j < 2; ++j) {
          for (int l = 0; l < 2; ++l) {
            coeff_[w][2 * i + k][2 * j + l] = static_cast<std::int8_t>(left[2 * i + j] * right[2 * l + k]);
          }
        }
      }
    }
  }
}

std::array<std::uint32_t, 4> ActionTable::apply(unsigned w, const std::array<std::uint32_t, 4>& a,
                                                const std::array<std::uint32_t, 4>& inverse) const {
  const auto& src = swaps(w) ? inverse : a;
  const auto& c = coeff_[w];
  const std::int64_t n = n_;
  std::array<std::uint32_t, 4> out{};
  for (int i = 0; i < 4; ++i) {
    std::int64_t v = 0;
    for (int j = 0; j < 4; ++j) v += c[i][j] * static_cast<std::int64_t>(src[j]);
    v %= n;
    if (v < 0) v += n;
    out[i] = static_cast<std::uint32_t>(v);
  }
  return out;
}

std::array<std::uint32_t, 4> ActionTable::inverse_of(const std::array<std::uint32_t, 4>& a) const {
  const std::uint64_t n = n_;
  const std::uint64_t determinant = (static_cast<std::uint64_t>(a[0]) * a[3] + (n - a[1]) * a[2]) % n;
  const std::uint64_t inv = units_.inverse(static_cast<std::uint32_t>(determinant));
  if (inv == 0) throw SingularMatrixError("ActionTable::inverse_of: singular matrix");
  return {static_cast<std::uint32_t>(a[3] * inv % n), static_cast<std::uint32_t>((n - a[1]) * inv % n),
          static_cast<std::uint32_t>((n - a[2]) * inv % n), static_cast<std::uint32_t>(a[0] * inv % n)};
}

}  // namespace beauville
