// beauville: count, enumerate, classify and verify Beauville structures on Z_n^2.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "beauville/cli.hpp"

namespace cli = beauville::cli;

int main(int argc, char** argv) {
  CLI::App app{"Beauville structures on Z_n^2 and their isomorphism classes"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand; subcommands inherit this.
  app.fallthrough();

  cli::Options options;
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-swap", options.no_swap, "Classify under the factor-preserving subgroup only");
  app.add_option("--threads", options.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", options.budget, "Largest n that may be enumerated")->check(CLI::PositiveNumber);
  app.add_flag("--no-cache", options.no_cache, "Ignore cached reports (verify: recompute and compare)");
  app.add_option("--output", output, "Write results to PATH instead of stdout");

  std::uint64_t n = 0;
  std::string range_text;
  auto* count = app.add_subcommand("count", "Closed-form count of isomorphism classes");
  count->add_option("n", n, "Level")->required();
  auto* enumerate = app.add_subcommand("enumerate", "List every matrix in F_n");
  enumerate->add_option("n", n, "Level")->required();
  auto* classify = app.add_subcommand("classify", "Orbit representatives, sizes and stabilizers");
  classify->add_option("n", n, "Level")->required();
  auto* verify = app.add_subcommand("verify", "Cross-check every method on a level or range A..B");
  verify->add_option("range", range_text, "N or A..B")->required();
  auto* table = app.add_subcommand("table", "One row per valid level in a range A..B");
  table->add_option("range", range_text, "N or A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  options.format = format == "csv" ? cli::Format::Csv : cli::Format::Json;
  if (!output.empty()) options.output = output;
  options.cache = beauville::io::ReportCache::from_environment();

  try {
    if (*count) return cli::run_count(n, options, std::cout, std::cerr);
    if (*enumerate) return cli::run_enumerate(n, options, std::cout, std::cerr);
    if (*classify) return cli::run_classify(n, options, std::cout, std::cerr);
    const cli::LevelRange range = cli::parse_range(range_text);
    if (*verify) return cli::run_verify(range, options, std::cout, std::cerr);
    return cli::run_table(range, options, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitVerificationFailed;
  }
}
