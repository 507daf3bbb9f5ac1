#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <unistd.h>

#include "qwalk/app/cli.hpp"
#include "qwalk/app/commands.hpp"
#include "qwalk/app/config.hpp"
#include "qwalk/error.hpp"

namespace fs = std::filesystem;
using namespace qwalk::app;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qwalk_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(std::vector<std::string> args) {
  static int counter = 0;
  const fs::path out = scratch() / ("out" + std::to_string(counter++));
  const bool has_out = std::find(args.begin(), args.end(), "--out") != args.end();
  if (!has_out && !args.empty() && args.front() != "verify") {
    args.push_back("--out");
    args.push_back(out.string());
  }
  std::vector<const char*> argv{"qwalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), err);
  std::string text;
  if (fs::exists(out)) {
    std::ifstream in(out, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  return {code, text, err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double column_sum(const std::vector<std::vector<std::string>>& rows, std::size_t col) {
  double s = 0.0;
  for (std::size_t k = 1; k < rows.size(); ++k) s += std::stod(rows[k][col]);
  return s;
}

}  // namespace

TEST_CASE("simulate writes a normalised CSV") {
  const auto r = run({"simulate", "--shift", "swapping", "--n", "16", "--omega", "1.0471975512", "--start", "1",
                      "--steps", "100000", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[0] == std::vector<std::string>{"position", "probability"});
  CHECK(rows[16][0] == "16");
  CHECK(column_sum(rows, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("zero steps gives the initial distribution") {
  const auto r = run({"simulate", "--shift", "moving", "--n", "8", "--omega-frac", "1/3", "--steps", "0"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows[1][1] == "1");
  for (std::size_t k = 2; k < rows.size(); ++k) CHECK(rows[k][1] == "0");
}

TEST_CASE("JSON round-trips") {
  const auto r = run({"simulate", "--shift", "swapping", "--n", "10", "--omega-frac", "1/3", "--steps", "200",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "time-average");
  CHECK(j["config"]["n_sites"] == 10);
  CHECK(j["config"]["shift"] == "swapping");
  CHECK(j["chi"].size() == 10);
  CHECK(j["values"] == j["chi"]);
  double s = 0.0;
  for (double v : j["chi"]) s += v;
  CHECK(s == doctest::Approx(1.0));
}

TEST_CASE("17 significant digits survive a round trip") {
  RunConfig c;
  c.shift = qwalk::ShiftKind::Moving;
  c.n_sites = 9;
  c.omega = 0.7;
  const auto lim = run_limitdist(c);
  const auto rows = parse_csv(render_limitdist(c, lim));
  for (int j = 1; j <= 9; ++j) CHECK(std::stod(rows[j][1]) == lim.chi.at(j));
}

TEST_CASE("spectrum of the 4-cycle") {
  const auto r = run({"spectrum", "--shift", "swapping", "--n", "3", "--omega-frac", "1/2"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"re", "im"});
  // sorted by phase: -i, 1, i, -1
  CHECK(std::stod(rows[1][1]) == doctest::Approx(-1.0));
  CHECK(std::stod(rows[2][0]) == doctest::Approx(1.0));
  CHECK(std::stod(rows[3][1]) == doctest::Approx(1.0));
  CHECK(std::stod(rows[4][0]) == doctest::Approx(-1.0));
}

TEST_CASE("spectrum rows lie on the unit circle and --compare reports the distance") {
  const auto r = run({"spectrum", "--shift", "swapping", "--n", "16", "--omega-frac", "1/3", "--compare"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows.size() == 31);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double re = std::stod(rows[k][0]), im = std::stod(rows[k][1]);
    CHECK(std::abs(re * re + im * im - 1.0) < 1e-10);
  }
  const auto pos = r.out.find("# max_set_distance=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 19)) < 1e-10);

  const auto j = run({"spectrum", "--shift", "moving", "--n", "12", "--omega", "0.9", "--compare", "--format", "json",
                      "--method", "spectral-analytic"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["values"].size() == 22);
  CHECK(parsed["max_set_distance"].get<double>() < 1e-9);
}

TEST_CASE("limitdist") {
  SUBCASE("moving mirror symmetry") {
    const auto r = run({"limitdist", "--shift", "moving", "--n", "16", "--omega-frac", "1/3", "--start", "1"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    for (int j = 1; j <= 16; ++j) CHECK(std::abs(std::stod(rows[j][1]) - std::stod(rows[17 - j][1])) < 1e-9);
    CHECK(column_sum(rows, 1) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("swapping power law, analytic split") {
    const auto r = run({"limitdist", "--shift", "swapping", "--n", "64", "--omega-frac", "1/3", "--start", "1",
                        "--method", "spectral-analytic"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"position", "probability", "intrinsic", "continuum"});
    const double rr = 1.0 / 3.0;
    const double lead = 0.5 * std::pow((1 - rr) / (1 - std::pow(rr, 63)), 2);
    CHECK(std::abs(std::stod(rows[1][1]) - lead) < 0.01);
    CHECK(column_sum(rows, 1) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("svg") {
    const auto a = run({"limitdist", "--shift", "moving", "--n", "8", "--omega", "0.5", "--format", "svg"});
    const auto b = run({"limitdist", "--shift", "moving", "--n", "8", "--omega", "0.5", "--format", "svg"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("<svg", 0) == 0);
    CHECK(a.out.find("position") != std::string::npos);
    CHECK(a.out.find("probability") != std::string::npos);
  }
}

TEST_CASE("identical runs are byte-identical") {
  for (const char* fmt : {"csv", "json"}) {
    const std::vector<std::string> args{"limitdist", "--shift", "swapping", "--n", "20", "--omega-frac", "1/4",
                                        "--start", "5", "--phi0", "0.3", "--format", fmt};
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("invalid configurations exit with 2") {
  CHECK(run({"simulate", "--shift", "moving", "--n", "2", "--omega", "1"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "sideways", "--n", "8", "--omega", "1"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8", "--omega", "4"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8", "--omega", "1", "--omega-frac", "1/3"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8", "--omega", "1", "--bogus"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8", "--omega", "1", "--start", "9"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8", "--omega", "1", "--steps", "-1"}).code == kExitInvalidConfig);
  CHECK(run({"limitdist", "--shift", "moving", "--n", "8", "--omega", "1", "--method", "time-average"}).code ==
        kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8", "--omega-frac", "1/0"}).code == kExitInvalidConfig);
  CHECK(run({"simulate", "--shift", "moving", "--n", "8", "--omega", "1", "--format", "xml"}).code == kExitInvalidConfig);
  CHECK(run({}).code == kExitInvalidConfig);
}

TEST_CASE("analytic exclusions are named") {
  const auto r = run({"limitdist", "--shift", "moving", "--n", "16", "--omega-frac", "1/2", "--method", "spectral-analytic"});
  CHECK(r.code == kExitInvalidConfig);
  CHECK(r.err.find("analytic mode unavailable") != std::string::npos);
  CHECK(r.err.find("omega != pi/2") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);
  const auto s = run({"limitdist", "--shift", "moving", "--n", "16", "--omega", "1", "--start", "3", "--method",
                      "spectral-analytic"});
  CHECK(s.code == kExitInvalidConfig);
  CHECK(s.err.find("analytic mode unavailable") != std::string::npos);
}

TEST_CASE("unwritable output exits with 4") {
  const auto r = run({"simulate", "--shift", "moving", "--n", "8", "--omega", "1", "--out", "/nonexistent/dir/x.csv"});
  CHECK(r.code == kExitIo);
}

TEST_CASE("omega fractions") {
  CHECK(parse_omega_frac("1/3") == doctest::Approx(std::numbers::pi / 3));
  CHECK(parse_omega_frac("2/3") == doctest::Approx(2 * std::numbers::pi / 3));
  CHECK(parse_omega_frac("1") == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(parse_omega_frac("a/3"), qwalk::InvalidInput);
  CHECK_THROWS_AS(parse_omega_frac("1/"), qwalk::InvalidInput);
}

TEST_CASE("verify quick passes on a correct build") {
  const auto out = scratch() / "verify.txt";
  const auto r = run({"verify", "--level", "quick", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(run({"verify", "--level", "medium"}).code == kExitInvalidConfig);
}
