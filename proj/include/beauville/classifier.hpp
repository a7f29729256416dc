#pragma once

// Orbits of W on F_n: isomorphism testing, canonical representatives, Burnside
// fixed-point counts, and stabilizer (automorphism-quotient) types.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "beauville/matrix.hpp"
#include "beauville/weyl.hpp"

namespace beauville {

enum class StabilizerType { Trivial, Z2, Z3, Z6, S3 };

std::string_view to_string(StabilizerType type);
std::optional<StabilizerType> parse_stabilizer_type(std::string_view text);
int order_of(StabilizerType type);

// Which isomorphisms identify two structures: all of W, or only the 36
// factor-preserving elements of S3 x S3.
enum class Symmetry { Full, FactorPreserving };

std::string_view to_string(Symmetry symmetry);
const std::vector<unsigned>& acting_elements(Symmetry symmetry);

struct OrbitClass {
  BeauvilleMatrix canonical_rep;  // lexicographic minimum of the orbit
  std::uint32_t orbit_size = 0;
  StabilizerType stabilizer_type = StabilizerType::Trivial;

  bool operator==(const OrbitClass&) const = default;
};

// Fixed points of one element of conjugacy class `class_index` (fixed counts are
// class functions), and how many group elements the class contributes.
struct ClassFixedCount {
  int class_index = 0;
  int class_size = 0;
  Count fixed = 0;

  bool operator==(const ClassFixedCount&) const = default;
};

struct ClassificationReport {
  std::uint32_t n = 0;
  Symmetry symmetry = Symmetry::Full;
  Count total_matrices = 0;
  std::vector<OrbitClass> orbit_classes;  // sorted by canonical representative
  std::vector<ClassFixedCount> burnside_breakdown;
  Count theta = 0;

  unsigned group_order() const;
  // sum over classes of class_size * fixed, divided by the group order (exact).
  Count burnside_average() const;
  std::map<StabilizerType, Count> stabilizer_histogram() const;

  bool operator==(const ClassificationReport&) const = default;
};

struct ClassifyOptions {
  unsigned threads = 1;
  Symmetry symmetry = Symmetry::Full;
};

// Throws ModulusMismatch when the moduli differ.
bool are_isomorphic(const BeauvilleMatrix& a, const BeauvilleMatrix& b, Symmetry symmetry = Symmetry::Full);

BeauvilleMatrix canonical_rep(const BeauvilleMatrix& a, Symmetry symmetry = Symmetry::Full);

// Indices (into WeylGroup::elements()) of the acting elements fixing a.
std::vector<unsigned> stabilizer(const BeauvilleMatrix& a, Symmetry symmetry = Symmetry::Full);

// Isomorphism type of a stabilizer subgroup; order 6 is split by commutativity.
// Throws InternalInconsistency for orders outside {1, 2, 3, 6}.
StabilizerType stabilizer_type_of(std::span<const unsigned> subgroup);
StabilizerType stabilizer_type(const BeauvilleMatrix& a);

// Full partition of F_n. The result is independent of options.threads.
ClassificationReport orbits(std::uint32_t n, const ClassifyOptions& options = {});

// |{A in F_n : act(w, A) = A}| by direct scan.
Count fixed_count(const WElement& w, std::uint32_t n, unsigned threads = 1);

// Number of orbits of the factor-preserving subgroup.
Count orbits_unswapped(std::uint32_t n, unsigned threads = 1);

}  // namespace beauville
