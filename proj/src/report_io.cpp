#include "beauville/report_io.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace beauville::io {

namespace {

constexpr std::array kStabilizerTypes{StabilizerType::Trivial, StabilizerType::Z2, StabilizerType::Z3,
                                      StabilizerType::Z6, StabilizerType::S3};

std::string csv_count(const std::optional<Count>& c) { return c ? to_string(*c) : std::string(); }

}  // namespace

Json count_to_json(Count value) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("count " + to_string(value) + " does not fit a 64-bit JSON number");
  }
  return Json(static_cast<std::uint64_t>(value));
}

Count count_from_json(const Json& value) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw std::invalid_argument("expected a nonnegative integer, got " + value.dump());
  }
  return value.get<std::uint64_t>();
}

std::string matrix_to_string(const Mat2& m) { return m.to_string(); }

Mat2 matrix_from_string(const std::string& text, std::uint32_t n) {
  std::istringstream in(text);
  std::array<std::int64_t, 4> e{};
  for (auto& x : e) {
    if (!(in >> x) || x < 0 || x >= static_cast<std::int64_t>(n)) {
      throw std::invalid_argument("malformed matrix \"" + text + "\" mod " + std::to_string(n));
    }
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing text in matrix \"" + text + "\"");
  return Mat2(Modulus(n), e[0], e[1], e[2], e[3]);
}

Json to_json(const ThetaBreakdown& t) {
  Json j;
  j["n"] = t.n;
  j["theta1"] = count_to_json(t.theta1);
  j["theta2_prod"] = count_to_json(t.theta2_prod);
  j["theta3_prod"] = count_to_json(t.theta3_prod);
  j["theta4_prod"] = count_to_json(t.theta4_prod);
  j["theta"] = count_to_json(t.theta);
  return j;
}

ThetaBreakdown theta_from_json(const Json& j) {
  ThetaBreakdown t;
  t.n = j.at("n").get<std::uint64_t>();
  t.theta1 = count_from_json(j.at("theta1"));
  t.theta2_prod = count_from_json(j.at("theta2_prod"));
  t.theta3_prod = count_from_json(j.at("theta3_prod"));
  t.theta4_prod = count_from_json(j.at("theta4_prod"));
  t.theta = count_from_json(j.at("theta"));
  return t;
}

Json histogram_to_json(const std::map<StabilizerType, Count>& histogram) {
  Json j = Json::object();
  for (auto type : kStabilizerTypes) {
    const auto it = histogram.find(type);
    j[std::string(to_string(type))] = count_to_json(it == histogram.end() ? 0 : it->second);
  }
  return j;
}

Json to_json(const ClassificationReport& report) {
  Json j;
  j["n"] = report.n;
  j["symmetry"] = std::string(to_string(report.symmetry));
  j["group_order"] = report.group_order();
  j["total_matrices"] = count_to_json(report.total_matrices);
  j["theta"] = count_to_json(report.theta);
  Json orbits = Json::array();
  for (const auto& c : report.orbit_classes) {
    Json o;
    o["rep"] = matrix_to_string(c.canonical_rep.matrix());
    o["size"] = c.orbit_size;
    o["stabilizer"] = std::string(to_string(c.stabilizer_type));
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  Json burnside = Json::array();
  for (const auto& b : report.burnside_breakdown) {
    Json e;
    e["class"] = b.class_index;
    e["class_size"] = b.class_size;
    e["fixed"] = count_to_json(b.fixed);
    burnside.push_back(std::move(e));
  }
  j["burnside"] = std::move(burnside);
  j["stabilizers"] = histogram_to_json(report.stabilizer_histogram());
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  ClassificationReport report;
  report.n = j.at("n").get<std::uint32_t>();
  const auto symmetry = j.at("symmetry").get<std::string>();
  if (symmetry == to_string(Symmetry::Full)) {
    report.symmetry = Symmetry::Full;
  } else if (symmetry == to_string(Symmetry::FactorPreserving)) {
    report.symmetry = Symmetry::FactorPreserving;
  } else {
    throw std::invalid_argument("unknown symmetry \"" + symmetry + "\"");
  }
  report.total_matrices = count_from_json(j.at("total_matrices"));
  report.theta = count_from_json(j.at("theta"));
  for (const auto& o : j.at("orbits")) {
    const auto type = parse_stabilizer_type(o.at("stabilizer").get<std::string>());
    if (!type) throw std::invalid_argument("unknown stabilizer type " + o.at("stabilizer").dump());
    report.orbit_classes.push_back({BeauvilleMatrix(matrix_from_string(o.at("rep").get<std::string>(), report.n)),
                                    o.at("size").get<std::uint32_t>(), *type});
  }
  for (const auto& b : j.at("burnside")) {
    report.burnside_breakdown.push_back(
        {b.at("class").get<int>(), b.at("class_size").get<int>(), count_from_json(b.at("fixed"))});
  }
  if (j.at("group_order").get<unsigned>() != report.group_order()) {
    throw std::invalid_argument("group_order does not match symmetry");
  }
  return report;
}

Json to_json(const TableRow& row) {
  Json j;
  j["n"] = row.n;
  j["theta1"] = count_to_json(row.theta1);
  j["theta"] = count_to_json(row.theta);
  j["orbits"] = row.orbits ? count_to_json(*row.orbits) : Json(nullptr);
  j["burnside"] = row.burnside ? count_to_json(*row.burnside) : Json(nullptr);
  j["stabilizers"] = row.stabilizers ? histogram_to_json(*row.stabilizers) : Json(nullptr);
  j["verified"] = row.verified;
  return j;
}

TableRow table_row_from_json(const Json& j) {
  TableRow row;
  row.n = j.at("n").get<std::uint64_t>();
  row.theta1 = count_from_json(j.at("theta1"));
  row.theta = count_from_json(j.at("theta"));
  if (!j.at("orbits").is_null()) row.orbits = count_from_json(j.at("orbits"));
  if (!j.at("burnside").is_null()) row.burnside = count_from_json(j.at("burnside"));
  if (!j.at("stabilizers").is_null()) {
    std::map<StabilizerType, Count> histogram;
    for (const auto& [key, value] : j.at("stabilizers").items()) {
      const auto type = parse_stabilizer_type(key);
      if (!type) throw std::invalid_argument("unknown stabilizer type \"" + key + "\"");
      if (const Count c = count_from_json(value); c != 0) histogram[*type] = c;
    }
    row.stabilizers = std::move(histogram);
  }
  row.verified = j.at("verified").get<bool>();
  return row;
}

void write_theta_csv(std::ostream& out, const ThetaBreakdown& t) {
  out << "n,theta1,theta2_prod,theta3_prod,theta4_prod,theta\n";
  out << t.n << ',' << to_string(t.theta1) << ',' << to_string(t.theta2_prod) << ',' << to_string(t.theta3_prod)
      << ',' << to_string(t.theta4_prod) << ',' << to_string(t.theta) << '\n';
}

void write_report_csv(std::ostream& out, const ClassificationReport& report) {
  out << "n,rep,orbit_size,stabilizer\n";
  for (const auto& c : report.orbit_classes) {
    out << report.n << ',' << matrix_to_string(c.canonical_rep.matrix()) << ',' << c.orbit_size << ','
        << to_string(c.stabilizer_type) << '\n';
  }
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "n,theta1,theta,orbits,burnside";
  for (auto type : kStabilizerTypes) out << ',' << to_string(type);
  out << ",verified\n";
  for (const auto& row : rows) {
    out << row.n << ',' << to_string(row.theta1) << ',' << to_string(row.theta) << ',' << csv_count(row.orbits)
        << ',' << csv_count(row.burnside);
    for (auto type : kStabilizerTypes) {
      out << ',';
      if (!row.stabilizers) continue;
      const auto it = row.stabilizers->find(type);
      out << to_string(it == row.stabilizers->end() ? Count{0} : it->second);
    }
    out << ',' << (row.verified ? "true" : "false") << '\n';
  }
}

std::optional<ReportCache> ReportCache::from_environment() {
  if (const char* dir = std::getenv("BEAUVILLE_CACHE_DIR"); dir && *dir) return ReportCache(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return ReportCache(std::filesystem::path(xdg) / "beauville");
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return ReportCache(std::filesystem::path(home) / ".cache" / "beauville");
  }
  return std::nullopt;
}

std::filesystem::path ReportCache::path_for(std::uint32_t n) const {
  return dir_ / ("classify-" + std::to_string(n) + ".json");
}

std::optional<ClassificationReport> ReportCache::load(std::uint32_t n) const {
  const auto path = path_for(n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    auto report = report_from_json(j.at("report"));
    if (report.n != n || report.symmetry != Symmetry::Full) return std::nullopt;
    return report;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ReportCache::store(const ClassificationReport& report) const {
  const auto path = path_for(report.n);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["report"] = to_json(report);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot move cache file into place at " + path.string() + ": " + ec.message());
}

}  // namespace beauville::io
