#include "beauville/classifier.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

#include "beauville/errors.hpp"

namespace beauville {

namespace {

using Entries = std::array<std::uint32_t, 4>;

const std::vector<unsigned>& non_identity(Symmetry symmetry) {
  static const auto strip = [](const std::vector<unsigned>& v) {
    std::vector<unsigned> out;
    std::copy_if(v.begin(), v.end(), std::back_inserter(out), [](unsigned i) { return i != 0; });
    return out;
  };
  static const std::vector<unsigned> full = strip(acting_elements(Symmetry::Full));
  static const std::vector<unsigned> preserving = strip(acting_elements(Symmetry::FactorPreserving));
  return symmetry == Symmetry::Full ? full : preserving;
}

// Lazily inverted view of one matrix under the precompiled action.
class Images {
 public:
  Images(const ActionTable& table, const Entries& a) : table_(table), a_(a) {}

  Entries operator()(unsigned w) {
    if (table_.swaps(w) && !have_inverse_) {
      inverse_ = table_.inverse_of(a_);
      have_inverse_ = true;
    }
    return table_.apply(w, a_, inverse_);
  }

 private:
  const ActionTable& table_;
  const Entries& a_;
  Entries inverse_{};
  bool have_inverse_ = false;
};

bool is_orbit_minimum(const ActionTable& table, const Entries& a, const std::vector<unsigned>& elements) {
  Images images(table, a);
  for (unsigned w : elements) {
    if (images(w) < a) return false;
  }
  return true;
}

std::vector<unsigned> stabilizer_of(const ActionTable& table, const Entries& a, Symmetry symmetry) {
  std::vector<unsigned> out{0};
  Images images(table, a);
  for (unsigned w : non_identity(symmetry)) {
    if (images(w) == a) out.push_back(w);
  }
  return out;
}

// For each listed conjugacy class of W, the class of its representative inside the
// acting group. Elements of one orbit fixed by x number |orbit| * |K(x) cap Stab| / |K(x)|.
struct BreakdownPlan {
  std::vector<int> class_indices;
  std::vector<std::vector<unsigned>> acting_class;  // sorted
};

BreakdownPlan make_plan(Symmetry symmetry) {
  const auto& group = WeylGroup::instance();
  const auto& acting = acting_elements(symmetry);
  const auto classes = group.conjugacy_classes(acting);
  BreakdownPlan plan;
  const int last = symmetry == Symmetry::Full ? 9 : 6;
  for (int k = 1; k <= last; ++k) {
    const unsigned rep = group.representative(k).index();
    for (const auto& cls : classes) {
      if (std::binary_search(cls.begin(), cls.end(), rep)) {
        plan.class_indices.push_back(k);
        plan.acting_class.push_back(cls);
      }
    }
  }
  return plan;
}

struct SliceResult {
  std::vector<OrbitClass> classes;
  Count members = 0;
  std::vector<Count> fixed_numerators;
};

}  // namespace

std::string_view to_string(StabilizerType type) {
  switch (type) {
    case StabilizerType::Trivial: return "TRIVIAL";
    case StabilizerType::Z2: return "Z2";
    case StabilizerType::Z3: return "Z3";
    case StabilizerType::Z6: return "Z6";
    case StabilizerType::S3: return "S3";
  }
  return "?";
}

std::optional<StabilizerType> parse_stabilizer_type(std::string_view text) {
  for (auto t : {StabilizerType::Trivial, StabilizerType::Z2, StabilizerType::Z3, StabilizerType::Z6,
                 StabilizerType::S3}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

int order_of(StabilizerType type) {
  switch (type) {
    case StabilizerType::Trivial: return 1;
    case StabilizerType::Z2: return 2;
    case StabilizerType::Z3: return 3;
    case StabilizerType::Z6:
    case StabilizerType::S3: return 6;
  }
  return 0;
}

std::string_view to_string(Symmetry symmetry) {
  return symmetry == Symmetry::Full ? "full" : "factor-preserving";
}

const std::vector<unsigned>& acting_elements(Symmetry symmetry) {
  static const std::vector<unsigned> full = WeylGroup::instance().all_indices();
  return symmetry == Symmetry::Full ? full : WeylGroup::instance().factor_preserving();
}

unsigned ClassificationReport::group_order() const {
  return static_cast<unsigned>(acting_elements(symmetry).size());
}

Count ClassificationReport::burnside_average() const {
  Count sum = 0;
  for (const auto& c : burnside_breakdown) sum += static_cast<Count>(c.class_size) * c.fixed;
  if (sum % group_order() != 0) {
    throw InternalInconsistency("Burnside sum " + to_string(sum) + " not divisible by the group order");
  }
  return sum / group_order();
}

std::map<StabilizerType, Count> ClassificationReport::stabilizer_histogram() const {
  std::map<StabilizerType, Count> out;
  for (const auto& c : orbit_classes) ++out[c.stabilizer_type];
  return out;
}

bool are_isomorphic(const BeauvilleMatrix& a, const BeauvilleMatrix& b, Symmetry symmetry) {
  if (a.n() != b.n()) {
    throw ModulusMismatch("cannot compare structures mod " + std::to_string(a.n()) + " and mod " +
                          std::to_string(b.n()));
  }
  const ActionTable table(a.n());
  Images images(table, a.matrix().entries());
  for (unsigned w : acting_elements(symmetry)) {
    if (images(w) == b.matrix().entries()) return true;
  }
  return false;
}

BeauvilleMatrix canonical_rep(const BeauvilleMatrix& a, Symmetry symmetry) {
  const ActionTable table(a.n());
  Images images(table, a.matrix().entries());
  Entries best = a.matrix().entries();
  for (unsigned w : non_identity(symmetry)) best = std::min(best, images(w));
  return BeauvilleMatrix(Mat2::from_normalized(a.n(), best[0], best[1], best[2], best[3]));
}

std::vector<unsigned> stabilizer(const BeauvilleMatrix& a, Symmetry symmetry) {
  const ActionTable table(a.n());
  return stabilizer_of(table, a.matrix().entries(), symmetry);
}

StabilizerType stabilizer_type_of(std::span<const unsigned> subgroup) {
  switch (subgroup.size()) {
    case 1: return StabilizerType::Trivial;
    case 2: return StabilizerType::Z2;
    case 3: return StabilizerType::Z3;
    case 6: return WeylGroup::instance().is_abelian(subgroup) ? StabilizerType::Z6 : StabilizerType::S3;
    default:
      throw InternalInconsistency("stabilizer of order " + std::to_string(subgroup.size()) +
                                  " is outside {1, 2, 3, 6}");
  }
}

StabilizerType stabilizer_type(const BeauvilleMatrix& a) { return stabilizer_type_of(stabilizer(a)); }

ClassificationReport orbits(std::uint32_t n, const ClassifyOptions& options) {
  const BeauvilleEnumerator enumerator(n);
  const ActionTable table(n);
  const auto& rest = non_identity(options.symmetry);
  const unsigned group_order = static_cast<unsigned>(acting_elements(options.symmetry).size());
  const BreakdownPlan plan = make_plan(options.symmetry);

  auto slices = detail::run_sharded<SliceResult>(n, options.threads, [&](std::size_t a) {
    SliceResult out;
    out.fixed_numerators.assign(plan.class_indices.size(), 0);
    enumerator.for_each_with_leading(static_cast<std::uint32_t>(a), [&](const BeauvilleMatrix& m) {
      ++out.members;
      const Entries& e = m.matrix().entries();
      if (!is_orbit_minimum(table, e, rest)) return;
      const auto stab = stabilizer_of(table, e, options.symmetry);
      const auto orbit_size = static_cast<std::uint32_t>(group_order / stab.size());
      out.classes.push_back({m, orbit_size, stabilizer_type_of(stab)});
      for (std::size_t k = 0; k < plan.class_indices.size(); ++k) {
        const auto& cls = plan.acting_class[k];
        const auto hits = std::count_if(stab.begin(), stab.end(),
                                        [&](unsigned w) { return std::binary_search(cls.begin(), cls.end(), w); });
        out.fixed_numerators[k] += static_cast<Count>(orbit_size) * static_cast<Count>(hits);
      }
    });
    return out;
  });

  ClassificationReport report;
  report.n = n;
  report.symmetry = options.symmetry;
  std::vector<Count> numerators(plan.class_indices.size(), 0);
  for (auto& slice : slices) {
    report.total_matrices += slice.members;
    report.orbit_classes.insert(report.orbit_classes.end(), slice.classes.begin(), slice.classes.end());
    for (std::size_t k = 0; k < numerators.size(); ++k) numerators[k] += slice.fixed_numerators[k];
  }
  const auto& group = WeylGroup::instance();
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    const Count acting_class_size = plan.acting_class[k].size();
    if (numerators[k] % acting_class_size != 0) {
      throw InternalInconsistency("fixed-point numerator for class " + std::to_string(plan.class_indices[k]) +
                                  " is not divisible by its class size");
    }
    const int k_index = plan.class_indices[k];
    report.burnside_breakdown.push_back(
        {k_index, group.class_of(group.representative(k_index).index()).size, numerators[k] / acting_class_size});
  }
  report.theta = report.orbit_classes.size();

  Count covered = 0;
  for (const auto& c : report.orbit_classes) covered += c.orbit_size;
  if (covered != report.total_matrices) {
    throw InternalInconsistency("orbit sizes sum to " + to_string(covered) + ", expected " +
                                to_string(report.total_matrices));
  }
  if (report.burnside_average() != report.theta) {
    throw InternalInconsistency("Burnside average " + to_string(report.burnside_average()) +
                                " differs from the orbit count " + to_string(report.theta));
  }
  return report;
}

Count fixed_count(const WElement& w, std::uint32_t n, unsigned threads) {
  const BeauvilleEnumerator enumerator(n);
  const ActionTable table(n);
  const unsigned index = w.index();
  const auto slices = detail::run_sharded<Count>(n, threads, [&](std::size_t a) {
    Count fixed = 0;
    enumerator.for_each_with_leading(static_cast<std::uint32_t>(a), [&](const BeauvilleMatrix& m) {
      Images images(table, m.matrix().entries());
      if (images(index) == m.matrix().entries()) ++fixed;
    });
    return fixed;
  });
  return std::accumulate(slices.begin(), slices.end(), Count{0});
}

Count orbits_unswapped(std::uint32_t n, unsigned threads) {
  return orbits(n, {threads, Symmetry::FactorPreserving}).theta;
}

}  // namespace beauville
