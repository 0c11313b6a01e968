#include <CLI11.hpp>

#include <sstream>

#include "spiral/cli.hpp"

namespace {

// "--x0 1,1" -> {1.0, 1.0}
bool parse_coords(const std::string& csv, std::vector<double>& out) {
  out.clear();
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spiral: splitting methods with circumcenter acceleration"};
  app.require_subcommand(1);

  spiral::cli::FeasArgs feas;
  std::string feas_x0 = "1,1";
  auto* feas_cmd = app.add_subcommand("feas", "feasibility run with trajectory export");
  feas_cmd->add_option("--problem", feas.problem, "two-lines | circle-line | exp-graph")
      ->required();
  feas_cmd->add_option("--theta", feas.theta, "two-lines angle in radians");
  feas_cmd->add_option("--method", feas.method, "dr | crm | lt")->required();
  feas_cmd->add_option("--x0", feas_x0, "start point, comma separated")->required();
  feas_cmd->add_option("--max-iter", feas.max_iter, "iteration cap");
  feas_cmd->add_option("--tol", feas.tol, "step-norm stopping tolerance");
  feas_cmd->add_option("--eps-col", feas.eps_col, "colinearity guard tolerance");
  feas_cmd->add_option("--out", feas.out, "trajectory CSV path, '-' for stdout");

  spiral::cli::CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Lyapunov-geometry checker sweeps");
  check_cmd->add_option("--instance", check.instance, "two-lines | exp-graph")
      ->required();
  check_cmd->add_option("--checker", check.checker,
                        "spiraling | bisectors | mss | newton")
      ->required();
  check_cmd->add_option("--samples", check.samples, "random sample count");
  check_cmd->add_option("--seed", check.seed, "sampler seed");
  check_cmd->add_option("--tol", check.tol, "residual tolerance");
  check_cmd->add_option("--theta", check.theta, "two-lines angle (nonzero)");

  auto* bp_cmd = app.add_subcommand("bp", "basis pursuit solves and benchmarks");
  bp_cmd->require_subcommand(1);

  spiral::cli::BpSolveArgs solve;
  std::string solve_accels = "none";
  auto* solve_cmd = bp_cmd->add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("--seed", solve.seed, "instance seed");
  solve_cmd->add_option("--n", solve.n, "variable count");
  solve_cmd->add_option("--nu", solve.nu, "constraint count (< n)");
  solve_cmd->add_option("--c", solve.c, "penalty parameter");
  solve_cmd->add_option("--accel", solve_accels, "comma list of none | lt | ct");
  solve_cmd->add_option("--max-iter", solve.max_iter, "pass cap");
  solve_cmd->add_option("--tol", solve.tol, "solve criterion tolerance");
  solve_cmd->add_option("--accel-cadence", solve.accel_cadence,
                        "passes between acceleration attempts");
  solve_cmd->add_option("--out", solve.out, "record path, '-' for stdout");

  spiral::cli::BpBenchArgs bench;
  std::string bench_accels = "none,lt";
  auto* bench_cmd = bp_cmd->add_subcommand("bench", "benchmark an instance batch");
  bench_cmd->add_option("--instances", bench.instances, "batch size")->required();
  bench_cmd->add_option("--n", bench.n, "variable count");
  bench_cmd->add_option("--nu", bench.nu, "constraint count (< n)");
  bench_cmd->add_option("--c", bench.c, "penalty parameter");
  bench_cmd->add_option("--seed-base", bench.seed_base, "seed of the first instance");
  bench_cmd->add_option("--accel", bench_accels, "comma list of none | lt | ct");
  bench_cmd->add_option("--max-iter", bench.max_iter, "pass cap");
  bench_cmd->add_option("--tol", bench.tol, "solve criterion tolerance");
  bench_cmd->add_option("--accel-cadence", bench.accel_cadence,
                        "passes between acceleration attempts");
  bench_cmd->add_option("--workers", bench.workers,
                        "worker threads; 0 = auto, 1 = serial");
  bench_cmd->add_option("--out", bench.out, "stats path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? spiral::cli::kExitOk : spiral::cli::kExitUsage;
  }

  try {
    if (feas_cmd->parsed()) {
      if (!parse_coords(feas_x0, feas.x0)) {
        std::fprintf(stderr, "error: could not parse --x0 '%s'\n", feas_x0.c_str());
        return spiral::cli::kExitUsage;
      }
      return spiral::cli::run_feas(feas);
    }
    if (check_cmd->parsed()) return spiral::cli::run_check(check);
    if (solve_cmd->parsed()) {
      const auto methods = spiral::cli::parse_accel_list(solve_accels);
      if (!methods) {
        std::fprintf(stderr, "error: bad --accel list '%s'\n", solve_accels.c_str());
        return spiral::cli::kExitUsage;
      }
      solve.methods = *methods;
      return spiral::cli::run_bp_solve(solve);
    }
    if (bench_cmd->parsed()) {
      const auto methods = spiral::cli::parse_accel_list(bench_accels);
      if (!methods) {
        std::fprintf(stderr, "error: bad --accel list '%s'\n", bench_accels.c_str());
        return spiral::cli::kExitUsage;
      }
      bench.methods = *methods;
      return spiral::cli::run_bp_bench(bench);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return spiral::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return spiral::cli::kExitCap;
  }
  return spiral::cli::kExitUsage;
}
