#pragma once

// Subcommand drivers behind the `beauville` executable. Each returns the process exit
// code and writes only to the streams it is given.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "beauville/report_io.hpp"

namespace beauville::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Largest n accepted by `count` and `table`: every count then fits a 64-bit integer.
inline constexpr std::uint64_t kCliClosedFormMax = std::uint64_t{1} << 15;
inline constexpr std::uint32_t kDefaultBudget = 101;
// Above this n, `verify` checks membership on F_n only, not on all of GL2(Z_n).
inline constexpr std::uint32_t kMembershipScanMax = 13;

enum class Format { Json, Csv };

struct Options {
  Format format = Format::Json;
  bool no_swap = false;
  unsigned threads = 1;
  std::uint32_t budget = kDefaultBudget;
  bool no_cache = false;
  std::optional<std::string> output;           // file path; stdout when empty
  std::optional<io::ReportCache> cache;         // disabled when empty
};

struct LevelRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

// "N" or "A..B". Throws std::invalid_argument.
LevelRange parse_range(const std::string& text);

int run_count(std::uint64_t n, const Options& options, std::ostream& out, std::ostream& err);
int run_enumerate(std::uint64_t n, const Options& options, std::ostream& out, std::ostream& err);
int run_classify(std::uint64_t n, const Options& options, std::ostream& out, std::ostream& err);
int run_verify(const LevelRange& range, const Options& options, std::ostream& out, std::ostream& err);
int run_table(const LevelRange& range, const Options& options, std::ostream& out, std::ostream& err);

// One level's cross-checks, as run by `verify`.
struct LevelCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LevelVerification {
  std::uint64_t n = 0;
  bool skipped = false;
  std::string note;
  std::vector<LevelCheck> checks;

  bool passed() const;
};

LevelVerification verify_level(std::uint64_t n, const Options& options);

io::TableRow table_row(std::uint64_t n, const Options& options);

}  // namespace beauville::cli
