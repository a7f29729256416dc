#include "beauville/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "beauville/errors.hpp"
#include "beauville/oracle.hpp"

namespace beauville::cli {

namespace {

// Runs body against --output (when given) or `out`; an unopenable path is a usage error.
int with_output(const Options& options, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  if (!options.output) return body(out);
  std::ofstream file(*options.output);
  if (!file) {
    err << "error: cannot open output file " << *options.output << '\n';
    return kExitUsage;
  }
  const int code = body(file);
  file.flush();
  if (!file) {
    err << "error: failed writing output file " << *options.output << '\n';
    return kExitUsage;
  }
  return code;
}

bool check_level(std::uint64_t n, std::ostream& err) {
  if (is_valid_level(n)) return true;
  try {
    require_valid_level(n);
  } catch (const LevelError& e) {
    err << "error: " << e.what() << '\n';
  }
  return false;
}

bool check_budget(std::uint64_t n, const Options& options, std::ostream& err) {
  if (n <= options.budget) return true;
  err << "error: n = " << n << " exceeds the enumeration budget (" << options.budget
      << "); use `count " << n << "` for the closed-form count, or raise --budget\n";
  return false;
}

// Full-symmetry report from the cache when allowed, otherwise computed (and cached).
ClassificationReport full_report(std::uint32_t n, const Options& options, std::ostream* warnings) {
  const bool use_cache = options.cache && !options.no_cache;
  if (use_cache) {
    if (auto cached = options.cache->load(n)) return *cached;
  }
  auto report = orbits(n, {options.threads, Symmetry::Full});
  if (use_cache) {
    try {
      options.cache->store(report);
    } catch (const std::exception& e) {
      if (warnings) *warnings << "warning: " << e.what() << '\n';
    }
  }
  return report;
}

LevelCheck make_check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

std::string describe(Count lhs, Count rhs) { return to_string(lhs) + (lhs == rhs ? " == " : " != ") + to_string(rhs); }

LevelCheck check_membership(std::uint32_t n, const ClassificationReport& report) {
  std::size_t tested = 0;
  if (n <= kMembershipScanMax) {
    const Modulus modulus(n);
    for (std::uint64_t code = 0; code < std::uint64_t{n} * n * n * n; ++code) {
      const Mat2 m = Mat2::decode(modulus, code);
      if (!is_invertible(m)) continue;
      ++tested;
      const bool main = is_beauville_matrix(m);
      if (main != oracle::beauville_condition_check(m) || main != oracle::free_action_check(m)) {
        return make_check("membership", false, "oracles disagree on (" + m.to_string() + ")");
      }
    }
    return make_check("membership", true, "three-way agreement on all " + std::to_string(tested) + " of GL2");
  }
  constexpr std::size_t kSample = 200;
  for (const auto& c : report.orbit_classes) {
    if (tested == kSample) break;
    ++tested;
    const Mat2& m = c.canonical_rep.matrix();
    if (!oracle::beauville_condition_check(m) || !oracle::free_action_check(m)) {
      return make_check("membership", false, "oracle rejects representative (" + m.to_string() + ")");
    }
  }
  return make_check("membership", true, "oracles accept " + std::to_string(tested) + " orbit representatives");
}

LevelCheck check_stabilizers(std::uint32_t n, const ClassificationReport& report) {
  bool has_minus_one_prime = false;
  for (const auto& pp : factorize(n)) has_minus_one_prime |= pp.p % 3 == 2;
  const bool five = n % 5 == 0;
  for (const auto& c : report.orbit_classes) {
    const auto t = c.stabilizer_type;
    if (has_minus_one_prime && t == StabilizerType::Z6) {
      return make_check("stabilizers", false, "Z6 stabilizer with a prime p = -1 mod 3 dividing n");
    }
    if (five && t != StabilizerType::Trivial && t != StabilizerType::Z3) {
      return make_check("stabilizers", false, "stabilizer " + std::string(to_string(t)) + " although 5 | n");
    }
    if (static_cast<unsigned>(order_of(t)) * c.orbit_size != report.group_order()) {
      return make_check("stabilizers", false, "orbit-stabilizer fails at (" + c.canonical_rep.matrix().to_string() + ")");
    }
  }
  return make_check("stabilizers", true, "all types allowed");
}

}  // namespace

bool LevelVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LevelCheck& c) { return c.passed; });
}

LevelRange parse_range(const std::string& text) {
  const auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument("bad level \"" + s + "\" in range \"" + text + "\"");
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad level \"" + s + "\" in range \"" + text + "\"");
    return static_cast<std::uint64_t>(v);
  };
  const auto dots = text.find("..");
  LevelRange range;
  try {
    if (dots == std::string::npos) {
      range.first = range.last = parse(text);
    } else {
      range.first = parse(text.substr(0, dots));
      range.last = parse(text.substr(dots + 2));
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("level out of range in \"" + text + "\"");
  }
  if (range.first > range.last) throw std::invalid_argument("empty range \"" + text + "\"");
  return range;
}

int run_count(std::uint64_t n, const Options& options, std::ostream& out, std::ostream& err) {
  if (!check_level(n, err)) return kExitUsage;
  if (n > kCliClosedFormMax) {
    err << "error: n = " << n << " exceeds the closed-form bound " << kCliClosedFormMax << '\n';
    return kExitUsage;
  }
  const ThetaBreakdown t = theta(n);
  return with_output(options, out, err, [&](std::ostream& os) {
    if (options.format == Format::Csv) {
      io::write_theta_csv(os, t);
    } else {
      os << io::to_json(t).dump(2) << '\n';
    }
    return kExitOk;
  });
}

int run_enumerate(std::uint64_t n, const Options& options, std::ostream& out, std::ostream& err) {
  if (!check_level(n, err) || !check_budget(n, options, err)) return kExitUsage;
  const BeauvilleEnumerator enumerator(static_cast<std::uint32_t>(n));
  return with_output(options, out, err, [&](std::ostream& os) {
    Count count = 0;
    if (options.format == Format::Csv) {
      os << "n,matrix\n";
      enumerator.for_each([&](const BeauvilleMatrix& m) {
        os << n << ',' << m.matrix().to_string() << '\n';
        ++count;
      });
      return kExitOk;
    }
    // Streamed in the layout of Json::dump(2).
    os << "{\n  \"n\": " << n << ",\n  \"matrices\": [";
    enumerator.for_each([&](const BeauvilleMatrix& m) {
      os << (count == 0 ? "\n    \"" : ",\n    \"") << m.matrix().to_string() << '"';
      ++count;
    });
    os << (count == 0 ? "]" : "\n  ]") << ",\n  \"count\": " << to_string(count) << "\n}\n";
    return kExitOk;
  });
}

int run_classify(std::uint64_t n, const Options& options, std::ostream& out, std::ostream& err) {
  if (!check_level(n, err) || !check_budget(n, options, err)) return kExitUsage;
  const auto level = static_cast<std::uint32_t>(n);
  const ClassificationReport report = options.no_swap
                                          ? orbits(level, {options.threads, Symmetry::FactorPreserving})
                                          : full_report(level, options, &err);
  return with_output(options, out, err, [&](std::ostream& os) {
    if (options.format == Format::Csv) {
      io::write_report_csv(os, report);
    } else {
      os << io::to_json(report).dump(2) << '\n';
    }
    return kExitOk;
  });
}

LevelVerification verify_level(std::uint64_t n, const Options& options) {
  LevelVerification result;
  result.n = n;
  if (!is_valid_level(n)) {
    result.skipped = true;
    try {
      require_valid_level(n);
    } catch (const LevelError& e) {
      result.note = e.what();
    }
    return result;
  }
  if (n > options.budget) {
    result.skipped = true;
    result.note = "n exceeds the enumeration budget " + std::to_string(options.budget);
    return result;
  }
  const auto level = static_cast<std::uint32_t>(n);
  const ThetaBreakdown closed = theta(n);

  const ClassificationReport report = options.no_cache ? orbits(level, {options.threads, Symmetry::Full})
                                                       : full_report(level, options, nullptr);
  if (options.no_cache && options.cache) {
    if (const auto cached = options.cache->load(level)) {
      result.checks.push_back(make_check("cache", *cached == report, "cached report vs fresh computation"));
    }
  }

  result.checks.push_back(make_check("theta1", report.total_matrices == closed.theta1,
                                     "enumerated " + describe(report.total_matrices, closed.theta1)));
  result.checks.push_back(
      make_check("partition", report.theta == closed.theta, "orbits " + describe(report.theta, closed.theta)));

  // Burnside over direct fixed-point scans of one element per class.
  const auto& group = WeylGroup::instance();
  Count burnside_sum = 0;
  bool structure_ok = true;
  std::string structure_detail = "fixed counts";
  const std::array<Count, 10> expected{0, closed.theta1, 0, 0, 0, closed.theta2_prod, 0, closed.theta3_prod, 0,
                                       closed.theta4_prod};
  for (int k = 1; k <= WeylGroup::kClassCount; ++k) {
    const Count fixed = fixed_count(group.representative(k), level, options.threads);
    burnside_sum += static_cast<Count>(group.class_of(group.representative(k).index()).size) * fixed;
    structure_detail += " " + std::to_string(k) + ":" + to_string(fixed);
    structure_ok &= fixed == expected[k];
  }
  const bool exact = burnside_sum % WeylGroup::kOrder == 0;
  result.checks.push_back(make_check("burnside", exact && burnside_sum / WeylGroup::kOrder == closed.theta,
                                     "Burnside " + describe(burnside_sum / WeylGroup::kOrder, closed.theta)));
  result.checks.push_back(make_check("fixed-structure", structure_ok, structure_detail));

  if (level <= oracle::kNaiveMax) {
    const Count naive = oracle::naive_orbit_count(level);
    result.checks.push_back(make_check("union-find", naive == closed.theta, "components " + describe(naive, closed.theta)));
  }
  result.checks.push_back(check_stabilizers(level, report));
  result.checks.push_back(check_membership(level, report));
  return result;
}

int run_verify(const LevelRange& range, const Options& options, std::ostream& out, std::ostream& err) {
  return with_output(options, out, err, [&](std::ostream& os) {
    std::size_t passed = 0, failed = 0, skipped = 0;
    io::Json results = io::Json::array();
    for (std::uint64_t n = range.first; n <= range.last; ++n) {
      LevelVerification v;
      try {
        v = verify_level(n, options);
      } catch (const std::exception& e) {
        v.n = n;
        v.checks.push_back(make_check("exception", false, e.what()));
      }
      if (v.skipped) {
        ++skipped;
        // Only explicitly requested single levels are worth a note.
        if (range.first == range.last) {
          if (options.format == Format::Json) {
            results.push_back({{"n", n}, {"status", "skipped"}, {"note", v.note}});
          } else {
            os << "n=" << n << " SKIP " << v.note << '\n';
          }
        }
        continue;
      }
      const bool ok = v.passed();
      ok ? ++passed : ++failed;
      if (options.format == Format::Json) {
        io::Json checks = io::Json::array();
        for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        results.push_back({{"n", n}, {"status", ok ? "pass" : "fail"}, {"checks", std::move(checks)}});
      } else {
        os << "n=" << n << (ok ? " PASS" : " FAIL");
        if (n <= kCliClosedFormMax) os << " theta=" << to_string(theta(n).theta);
        os << '\n';
        for (const auto& c : v.checks) {
          os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
      }
    }
    if (options.format == Format::Json) {
      os << results.dump(2) << '\n';
    } else {
      os << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? kExitOk : kExitVerificationFailed;
  });
}

io::TableRow table_row(std::uint64_t n, const Options& options) {
  const ThetaBreakdown closed = theta(n);
  io::TableRow row;
  row.n = n;
  row.theta1 = closed.theta1;
  row.theta = closed.theta;
  if (n <= options.budget) {
    const auto report = full_report(static_cast<std::uint32_t>(n), options, nullptr);
    row.orbits = report.theta;
    row.burnside = report.burnside_average();
    row.stabilizers = report.stabilizer_histogram();
    row.verified = report.total_matrices == closed.theta1 && report.theta == closed.theta &&
                   *row.burnside == closed.theta;
  }
  return row;
}

int run_table(const LevelRange& range, const Options& options, std::ostream& out, std::ostream& err) {
  if (range.last > kCliClosedFormMax) {
    err << "error: table range ends above the closed-form bound " << kCliClosedFormMax << '\n';
    return kExitUsage;
  }
  std::vector<io::TableRow> rows;
  for (std::uint64_t n = range.first; n <= range.last; ++n) {
    if (is_valid_level(n)) rows.push_back(table_row(n, options));
  }
  return with_output(options, out, err, [&](std::ostream& os) {
    if (options.format == Format::Csv) {
      io::write_table_csv(os, rows);
    } else {
      io::Json j = io::Json::array();
      for (const auto& row : rows) j.push_back(io::to_json(row));
      os << j.dump(2) << '\n';
    }
    return kExitOk;
  });
}

}  // namespace beauville::cli
