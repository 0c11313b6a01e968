#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "spiral/cli.hpp"
#include "spiral/trajectory_io.hpp"

using namespace spiral;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

fs::path temp_file(const char* name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("format_double/parse_double: shortest round-trip") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> U(-1e6, 1e6);
  for (int it = 0; it < 2000; ++it) {
    double v = U(rng) * std::pow(10.0, int(rng() % 25) - 12);
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(parse_double("-1.25e3") == -1250.0);
  CHECK_THROWS_AS(parse_double("1.2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
}

TEST_CASE("trajectory CSV round-trips to identical doubles") {
  Trajectory traj;
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> U(-10, 10);
  for (int i = 0; i < 20; ++i) {
    Vec p(3);
    p << U(rng), U(rng) * 1e-7, U(rng) * 1e9;
    traj.points.push_back(p);
    traj.branches.push_back(i == 0 ? StepBranch::start : StepBranch::plain);
  }
  std::vector<Vec> shadows(traj.points.begin(), traj.points.end());

  std::ostringstream out;
  write_trajectory_csv(out, traj, &shadows);
  std::istringstream in(out.str());
  const auto parsed = parse_trajectory_csv(in);

  REQUIRE(parsed.rows.size() == traj.points.size());
  CHECK(parsed.dim == 3);
  CHECK(parsed.has_shadow);
  for (std::size_t i = 0; i < parsed.rows.size(); ++i) {
    CHECK(parsed.rows[i].iter == static_cast<long>(i));
    for (int j = 0; j < 3; ++j) {
      CHECK(parsed.rows[i].coords[j] == traj.points[i][j]);
      CHECK(parsed.rows[i].shadow[j] == shadows[i][j]);
    }
  }
  CHECK(parsed.rows[0].branch == "start");
  CHECK(parsed.rows[1].branch == "step");
}

TEST_CASE("run_feas: two-lines dr trajectory decays at cos(theta)") {
  const auto out = temp_file("spiral_test_feas_dr.csv");
  cli::FeasArgs args;
  args.problem = "two-lines";
  args.theta = 0.7854;
  args.method = "dr";
  args.x0 = {1.0, 1.0};
  args.max_iter = 500;
  args.tol = 1e-10;
  args.out = out.string();
  CHECK(cli::run_feas(args) == cli::kExitOk);

  std::ifstream is(out);
  const auto parsed = parse_trajectory_csv(is);
  REQUIRE(parsed.rows.size() > 10);
  CHECK(parsed.has_shadow);
  for (std::size_t i = 0; i + 1 < parsed.rows.size(); ++i) {
    const double n0 = std::hypot(parsed.rows[i].coords[0], parsed.rows[i].coords[1]);
    const double n1 = std::hypot(parsed.rows[i + 1].coords[0], parsed.rows[i + 1].coords[1]);
    CHECK(n1 / n0 == doctest::Approx(std::cos(0.7854)).epsilon(1e-9));
    // shadow is the projection onto the horizontal axis
    CHECK(parsed.rows[i].shadow[0] == parsed.rows[i].coords[0]);
    CHECK(parsed.rows[i].shadow[1] == 0.0);
  }
}

TEST_CASE("run_feas: two-lines lt writes start plus the fixed point") {
  const auto out = temp_file("spiral_test_feas_lt.csv");
  cli::FeasArgs args;
  args.problem = "two-lines";
  args.theta = 0.7854;
  args.method = "lt";
  args.x0 = {1.0, 1.0};
  args.out = out.string();
  CHECK(cli::run_feas(args) == cli::kExitOk);

  std::ifstream is(out);
  const auto parsed = parse_trajectory_csv(is);
  REQUIRE(parsed.rows.size() == 2);
  CHECK(parsed.rows[1].branch == "circumcenter");
  CHECK(std::hypot(parsed.rows[1].coords[0], parsed.rows[1].coords[1]) <= 1e-10);
}

TEST_CASE("run_feas: circle-line crm converges with populated shadow") {
  const auto out = temp_file("spiral_test_feas_crm.csv");
  cli::FeasArgs args;
  args.problem = "circle-line";
  args.method = "crm";
  args.x0 = {0.3, 0.8};
  args.max_iter = 200;
  args.tol = 1e-10;
  args.out = out.string();
  CHECK(cli::run_feas(args) == cli::kExitOk);
  std::ifstream is(out);
  const auto parsed = parse_trajectory_csv(is);
  CHECK(parsed.has_shadow);
  const auto& last = parsed.rows.back();
  CHECK(std::abs(std::abs(last.shadow[0]) - 1.0) < 1e-6);  // feasible point
}

TEST_CASE("run_feas: exp-graph DR walks into the intersection") {
  const auto out = temp_file("spiral_test_feas_exp.csv");
  cli::FeasArgs args;
  args.problem = "exp-graph";
  args.method = "dr";
  args.x0 = {0.8, 0.3};
  args.max_iter = 400;
  args.tol = 1e-9;
  args.out = out.string();
  CHECK(cli::run_feas(args) == cli::kExitOk);
  std::ifstream is(out);
  const auto parsed = parse_trajectory_csv(is);
  const auto& last = parsed.rows.back();
  CHECK(std::hypot(last.coords[0], last.coords[1]) < 1e-6);
}

TEST_CASE("run_feas: cap and usage errors") {
  cli::FeasArgs args;
  args.problem = "two-lines";
  args.method = "dr";
  args.x0 = {1.0, 1.0};
  args.max_iter = 3;  // cannot converge to 1e-10 in 3 steps
  args.tol = 1e-10;
  args.out = temp_file("spiral_test_feas_cap.csv").string();
  CHECK(cli::run_feas(args) == cli::kExitCap);

  args.problem = "bogus";
  CHECK(cli::run_feas(args) == cli::kExitUsage);
  args.problem = "two-lines";
  args.method = "bogus";
  CHECK(cli::run_feas(args) == cli::kExitUsage);
  args.method = "dr";
  args.x0 = {1.0};
  CHECK(cli::run_feas(args) == cli::kExitUsage);
}

TEST_CASE("run_check: sweeps pass on both instances") {
  cli::CheckArgs args;
  args.samples = 50;
  args.seed = 7;
  for (const char* inst : {"two-lines", "exp-graph"}) {
    args.instance = inst;
    args.tol = 1e-8;
    for (const char* checker : {"spiraling", "bisectors", "mss"}) {
      args.checker = checker;
      CAPTURE(inst);
      CAPTURE(checker);
      CHECK(cli::run_check(args) == cli::kExitOk);
    }
    args.checker = "newton";
    args.tol = 1e-14;
    CHECK(cli::run_check(args) == cli::kExitOk);
  }

  // the two-lines spiraling sweep holds at the tighter 1e-9 as well
  args.instance = "two-lines";
  args.checker = "spiraling";
  args.samples = 200;
  args.tol = 1e-9;
  CHECK(cli::run_check(args) == cli::kExitOk);
}

TEST_CASE("run_check: empty report and usage errors") {
  cli::CheckArgs args;
  args.instance = "two-lines";
  args.checker = "spiraling";
  args.samples = 0;
  CHECK(cli::run_check(args) == cli::kExitOk);

  args.instance = "bogus";
  CHECK(cli::run_check(args) == cli::kExitUsage);
  args.instance = "two-lines";
  args.checker = "bogus";
  CHECK(cli::run_check(args) == cli::kExitUsage);
  args.checker = "spiraling";
  args.samples = -1;
  CHECK(cli::run_check(args) == cli::kExitUsage);
  args.samples = 10;
  args.theta = 0.0;
  CHECK(cli::run_check(args) == cli::kExitUsage);
}

TEST_CASE("parse_accel_list") {
  auto lst = cli::parse_accel_list("none,lt");
  REQUIRE(lst.has_value());
  REQUIRE(lst->size() == 2);
  CHECK((*lst)[0] == Accel::none);
  CHECK((*lst)[1] == Accel::lt);
  CHECK(!cli::parse_accel_list("none,bogus").has_value());
  CHECK(!cli::parse_accel_list("").has_value());
}

TEST_CASE("run_bp_solve: record content and determinism") {
  const auto out = temp_file("spiral_test_solve.json");
  cli::BpSolveArgs args;
  args.seed = 0;
  args.n = 30;
  args.nu = 10;
  args.c = 1.0;
  args.methods = {Accel::none, Accel::lt};
  args.out = out.string();
  CHECK(cli::run_bp_solve(args) == cli::kExitOk);
  const std::string first = slurp(out);

  const auto doc = nlohmann::json::parse(first);
  CHECK(doc["mode"] == "bp-solve");
  CHECK(doc["n"] == 30);
  REQUIRE(doc["methods"].size() == 2);
  CHECK(doc["methods"][0]["method"] == "none");
  CHECK(doc["methods"][0]["solved"] == true);
  CHECK(doc["methods"][1]["method"] == "lt");
  CHECK(doc["methods"][1]["solved"] == true);
  CHECK(doc["methods"][1]["iterations"].get<long>() <
        doc["methods"][0]["iterations"].get<long>());
  CHECK(doc["methods"][0]["x"].size() == 30);

  // identical invocations produce byte-identical output files
  CHECK(cli::run_bp_solve(args) == cli::kExitOk);
  CHECK(slurp(out) == first);
}

TEST_CASE("run_bp_solve: usage validation") {
  cli::BpSolveArgs args;
  args.nu = 30;  // must stay below n
  args.n = 30;
  CHECK(cli::run_bp_solve(args) == cli::kExitUsage);
  args.nu = 10;
  args.c = 0.0;
  CHECK(cli::run_bp_solve(args) == cli::kExitUsage);
}

TEST_CASE("run_bp_solve: ct arm exits 2 but still writes the record") {
  const auto out = temp_file("spiral_test_solve_ct.json");
  cli::BpSolveArgs args;
  args.seed = 0;
  args.methods = {Accel::ct};
  args.max_iter = 50'000;
  args.out = out.string();
  CHECK(cli::run_bp_solve(args) == cli::kExitCap);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["methods"][0]["solved"] == false);
  CHECK(doc["methods"][0]["iterations"] == 50'000);
}

TEST_CASE("run_bp_bench: stats document, worker independence, determinism") {
  const auto out1 = temp_file("spiral_test_bench1.json");
  cli::BpBenchArgs args;
  args.instances = 6;
  args.n = 16;
  args.nu = 5;
  args.c = 1.0;
  args.seed_base = 1;
  args.methods = {Accel::none, Accel::lt};
  args.workers = 1;  // serial reference path
  args.out = out1.string();
  CHECK(cli::run_bp_bench(args) == cli::kExitOk);
  const std::string serial_doc = slurp(out1);

  const auto out2 = temp_file("spiral_test_bench2.json");
  args.workers = 2;  // OpenMP path
  args.out = out2.string();
  CHECK(cli::run_bp_bench(args) == cli::kExitOk);
  CHECK(slurp(out2) == serial_doc);

  const auto doc = nlohmann::json::parse(serial_doc);
  CHECK(doc["mode"] == "bp-bench");
  REQUIRE(doc["stats"].size() == 2);
  const auto& st = doc["stats"][0];
  CHECK(st.contains("wins"));
  CHECK(st.contains("min"));
  CHECK(st.contains("q1"));
  CHECK(st.contains("median"));
  CHECK(st.contains("q3"));
  CHECK(st.contains("max"));
  CHECK(st["min"].get<double>() <= st["q1"].get<double>());
  CHECK(st["q1"].get<double>() <= st["median"].get<double>());
  CHECK(st["median"].get<double>() <= st["q3"].get<double>());
  CHECK(st["q3"].get<double>() <= st["max"].get<double>());
  CHECK(doc["instances_detail"].size() == 6);

  // wins sum to the batch size
  double wins = 0.0;
  for (const auto& s : doc["stats"]) wins += s["wins"].get<double>();
  CHECK(wins == doctest::Approx(6.0));

  args.instances = 0;
  CHECK(cli::run_bp_bench(args) == cli::kExitUsage);
}
