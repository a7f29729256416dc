#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "beauville/cli.hpp"
#include "doctest.h"

using namespace beauville;
namespace cli = beauville::cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  Run r;
  r.code = f(out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("beauville-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

cli::Options json_options() {
  cli::Options o;
  o.format = cli::Format::Json;
  return o;
}

cli::Options csv_options() {
  cli::Options o;
  o.format = cli::Format::Csv;
  return o;
}

}  // namespace

TEST_CASE("count") {
  const auto five = run([](auto& o, auto& e) { return cli::run_count(5, json_options(), o, e); });
  CHECK(five.code == cli::kExitOk);
  CHECK(io::Json::parse(five.out).at("theta") == 1);
  const auto thirteen = run([](auto& o, auto& e) { return cli::run_count(13, json_options(), o, e); });
  CHECK(io::Json::parse(thirteen.out).at("theta") == 178);
  const auto nine = run([](auto& o, auto& e) { return cli::run_count(9, json_options(), o, e); });
  CHECK(nine.code == cli::kExitUsage);
  CHECK(nine.out.empty());
  CHECK(nine.err.find("gcd(n, 6)") != std::string::npos);
  const auto huge = run([](auto& o, auto& e) { return cli::run_count((1u << 15) + 1, json_options(), o, e); });
  CHECK(huge.code == cli::kExitUsage);
  const auto csv = run([](auto& o, auto& e) { return cli::run_count(35, csv_options(), o, e); });
  CHECK(csv.out == "n,theta1,theta2_prod,theta3_prod,theta4_prod,theta\n35,8640,216,0,0,132\n");
}

TEST_CASE("enumerate") {
  const auto five = run([](auto& o, auto& e) { return cli::run_enumerate(5, json_options(), o, e); });
  const auto j = io::Json::parse(five.out);
  CHECK(j.at("count") == 24);
  CHECK(j.at("matrices").size() == 24);
  CHECK(j.at("matrices")[0] == "1 1 2 4");
  // The streamed text is exactly what the JSON library would have produced.
  CHECK(j.dump(2) + "\n" == five.out);
  const auto csv = run([](auto& o, auto& e) { return cli::run_enumerate(7, csv_options(), o, e); });
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 361);
  cli::Options small = json_options();
  small.budget = 5;
  const auto refused = run([&](auto& o, auto& e) { return cli::run_enumerate(7, small, o, e); });
  CHECK(refused.code == cli::kExitUsage);
  CHECK(refused.err.find("count") != std::string::npos);
}

TEST_CASE("classify") {
  const auto five = run([](auto& o, auto& e) { return cli::run_classify(5, json_options(), o, e); });
  const auto j = io::Json::parse(five.out);
  REQUIRE(j.at("orbits").size() == 1);
  CHECK(j.at("orbits")[0].at("stabilizer") == "Z3");
  CHECK(j.at("orbits")[0].at("size") == 24);
  CHECK(j.at("theta") == 1);

  const auto seven = run([](auto& o, auto& e) { return cli::run_classify(7, json_options(), o, e); });
  CHECK(io::Json::parse(seven.out).at("orbits").size() == 7);
  cli::Options no_swap = json_options();
  no_swap.no_swap = true;
  const auto unswapped = run([&](auto& o, auto& e) { return cli::run_classify(7, no_swap, o, e); });
  const auto u = io::Json::parse(unswapped.out);
  CHECK(u.at("orbits").size() == 12);
  CHECK(u.at("symmetry") == "factor-preserving");
  CHECK(u.at("group_order") == 36);

  const auto refused = run([](auto& o, auto& e) { return cli::run_classify(103, json_options(), o, e); });
  CHECK(refused.code == cli::kExitUsage);
  CHECK(refused.err.find("count 103") != std::string::npos);
}

TEST_CASE("verify") {
  const auto t35 = run([](auto& o, auto& e) { return cli::run_verify({35, 35}, csv_options(), o, e); });
  CHECK(t35.code == cli::kExitOk);
  CHECK(t35.out.find("n=35 PASS theta=132") != std::string::npos);
  const auto nine = run([](auto& o, auto& e) { return cli::run_verify({9, 9}, csv_options(), o, e); });
  CHECK(nine.code == cli::kExitOk);
  CHECK(nine.out.find("n=9 SKIP") != std::string::npos);

  const auto v = cli::verify_level(13, json_options());
  CHECK(v.passed());
  std::vector<std::string> names;
  for (const auto& c : v.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"theta1", "partition", "burnside", "fixed-structure", "union-find",
                                          "stabilizers", "membership"});
  CHECK(cli::verify_level(9, json_options()).skipped);
}

TEST_CASE("table") {
  const auto csv = run([](auto& o, auto& e) { return cli::run_table(cli::parse_range("5..35"), csv_options(), o, e); });
  std::vector<std::string> levels;
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,theta1,theta,orbits,burnside,TRIVIAL,Z2,Z3,Z6,S3,verified");
  while (std::getline(lines, line)) levels.push_back(line.substr(0, line.find(',')));
  CHECK(levels == std::vector<std::string>{"5", "7", "11", "13", "17", "19", "23", "25", "29", "31", "35"});

  const auto row5 = cli::table_row(5, json_options());
  CHECK(row5.theta1 == 24);
  CHECK(row5.theta == 1);
  CHECK(row5.verified);
  const auto row25 = cli::table_row(25, json_options());
  CHECK(row25.theta1 == 15000);
  CHECK(row25.theta == 225);

  cli::Options small = json_options();
  small.budget = 10;
  const auto beyond = cli::table_row(11, small);
  CHECK_FALSE(beyond.orbits.has_value());
  CHECK_FALSE(beyond.verified);
  CHECK(io::to_json(beyond).at("orbits").is_null());
}

TEST_CASE("parse_range") {
  CHECK(cli::parse_range("35").first == 35);
  CHECK(cli::parse_range("5..55").last == 55);
  CHECK_THROWS_AS(cli::parse_range("7..5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("x"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("5..-1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("5.."), std::invalid_argument);
}

TEST_CASE("JSON round trips") {
  for (std::uint32_t n : {5u, 7u, 35u}) {
    const auto report = orbits(n);
    const auto j = io::to_json(report);
    CHECK(io::report_from_json(j) == report);
    CHECK(io::to_json(io::report_from_json(j)).dump() == j.dump());
    const auto t = theta(n);
    CHECK(io::theta_from_json(io::to_json(t)) == t);
    const auto row = cli::table_row(n, json_options());
    CHECK(io::table_row_from_json(io::to_json(row)) == row);
  }
  CHECK(io::matrix_from_string("2 9 11 11", 13) == Mat2(Modulus(13), 2, 9, 11, 11));
  CHECK_THROWS_AS(io::matrix_from_string("1 2 3", 13), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_string("1 2 3 4 5", 13), std::invalid_argument);
  CHECK_THROWS_AS(io::count_to_json(Count{1} << 70), std::overflow_error);
  CHECK(io::count_from_json(io::count_to_json(Count{1} << 60)) == Count{1} << 60);
}

TEST_CASE("output is deterministic") {
  for (auto format : {cli::Format::Json, cli::Format::Csv}) {
    cli::Options a;
    a.format = format;
    cli::Options b = a;
    b.threads = 4;
    const auto first = run([&](auto& o, auto& e) { return cli::run_classify(35, a, o, e); });
    const auto second = run([&](auto& o, auto& e) { return cli::run_classify(35, b, o, e); });
    CHECK(first.out == second.out);
    const auto t1 = run([&](auto& o, auto& e) { return cli::run_table({5, 25}, a, o, e); });
    const auto t2 = run([&](auto& o, auto& e) { return cli::run_table({5, 25}, b, o, e); });
    CHECK(t1.out == t2.out);
  }
}

TEST_CASE("cache") {
  const auto dir = fresh_dir("cache");
  const io::ReportCache cache(dir);
  CHECK_FALSE(cache.load(7).has_value());

  cli::Options cached = json_options();
  cached.cache = cache;
  const auto first = run([&](auto& o, auto& e) { return cli::run_classify(7, cached, o, e); });
  REQUIRE(std::filesystem::exists(cache.path_for(7)));
  REQUIRE(cache.load(7).has_value());
  CHECK(*cache.load(7) == orbits(7));
  const auto second = run([&](auto& o, auto& e) { return cli::run_classify(7, cached, o, e); });
  CHECK(first.out == second.out);

  // verify --no-cache recomputes and compares against the stored report.
  cli::Options recheck = cached;
  recheck.no_cache = true;
  const auto v = cli::verify_level(7, recheck);
  CHECK(v.passed());
  CHECK(std::any_of(v.checks.begin(), v.checks.end(), [](const auto& c) { return c.name == "cache"; }));

  // A tampered entry is caught.
  auto tampered = orbits(7);
  tampered.orbit_classes[0].orbit_size += 1;
  cache.store(tampered);
  const auto bad = cli::verify_level(7, recheck);
  CHECK_FALSE(bad.passed());

  // Another schema version is ignored.
  {
    std::ofstream out(cache.path_for(11));
    out << R"({"schema_version": 999, "report": {}})";
  }
  CHECK_FALSE(cache.load(11).has_value());
  {
    std::ofstream out(cache.path_for(13));
    out << "not json";
  }
  CHECK_FALSE(cache.load(13).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("I/O failures name the path") {
  const auto dir = fresh_dir("io");
  std::filesystem::create_directories(dir);
  const auto blocker = dir / "file";
  std::ofstream(blocker) << "x";
  const io::ReportCache cache(blocker / "sub");
  std::string message;
  try {
    cache.store(orbits(5));
  } catch (const std::runtime_error& e) {
    message = e.what();
  }
  CHECK(message.find(blocker.string()) != std::string::npos);

  cli::Options to_file = json_options();
  to_file.output = (blocker / "out.json").string();
  const auto failed = run([&](auto& o, auto& e) { return cli::run_count(5, to_file, o, e); });
  CHECK(failed.code == cli::kExitUsage);
  CHECK(failed.err.find(*to_file.output) != std::string::npos);

  to_file.output = (dir / "out.json").string();
  const auto ok = run([&](auto& o, auto& e) { return cli::run_count(5, to_file, o, e); });
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.empty());
  std::ifstream in(*to_file.output);
  CHECK(io::Json::parse(in).at("theta") == 1);
  std::filesystem::remove_all(dir);
}
