#pragma once

// Machine-readable records (JSON and CSV) and the on-disk report cache.
//
// JSON objects carry explicit field names; every integer is written in decimal.
// Matrices are serialized as the string "a b c d" (row-major) with the modulus n
// attached to the enclosing record.

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "beauville/classifier.hpp"
#include "beauville/closed_forms.hpp"
#include "json.hpp"

namespace beauville::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Throws std::overflow_error above 2^64 - 1.
Json count_to_json(Count value);
Count count_from_json(const Json& value);

std::string matrix_to_string(const Mat2& m);
// Parses "a b c d" mod n; throws std::invalid_argument on malformed text.
Mat2 matrix_from_string(const std::string& text, std::uint32_t n);

Json to_json(const ThetaBreakdown& t);
ThetaBreakdown theta_from_json(const Json& j);

Json to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const Json& j);

Json histogram_to_json(const std::map<StabilizerType, Count>& histogram);

struct TableRow {
  std::uint64_t n = 0;
  Count theta1 = 0;
  Count theta = 0;
  std::optional<Count> orbits;    // enumerated partition, when within budget
  std::optional<Count> burnside;  // Burnside average of the enumerated report
  std::optional<std::map<StabilizerType, Count>> stabilizers;
  bool verified = false;

  bool operator==(const TableRow&) const = default;
};

Json to_json(const TableRow& row);
TableRow table_row_from_json(const Json& j);

void write_theta_csv(std::ostream& out, const ThetaBreakdown& t);
void write_report_csv(std::ostream& out, const ClassificationReport& report);
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

// One JSON file per n holding a full-symmetry ClassificationReport. Files written with
// another schema version are ignored.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  // BEAUVILLE_CACHE_DIR, else $XDG_CACHE_HOME/beauville, else $HOME/.cache/beauville.
  static std::optional<ReportCache> from_environment();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path path_for(std::uint32_t n) const;

  std::optional<ClassificationReport> load(std::uint32_t n) const;
  // Throws std::runtime_error naming the path on I/O failure.
  void store(const ClassificationReport& report) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace beauville::io
