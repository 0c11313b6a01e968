#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spiral/batch.hpp"
#include "spiral/lyapunov.hpp"

namespace spiral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;  // iteration cap hit / a check failed

/// Feasibility experiment with trajectory export.
struct FeasArgs {
  std::string problem;  // two-lines | circle-line | exp-graph
  double theta = 0.7853981633974483;
  std::string method;  // dr | crm | lt
  std::vector<double> x0;
  int max_iter = 500;
  double tol = 1e-10;
  double eps_col = kColinearEps;
  std::string out = "-";  // "-" = stdout
};
int run_feas(const FeasArgs& args);

/// Lyapunov-geometry checker sweeps.
struct CheckArgs {
  std::string instance;  // two-lines | exp-graph
  std::string checker;   // spiraling | bisectors | mss | newton
  int samples = 200;
  uint64_t seed = 7;
  double tol = 1e-8;
  double theta = 0.5235987755982988;  // two-lines angle; must be nonzero
};
int run_check(const CheckArgs& args);

/// One basis pursuit instance, every requested method.
struct BpSolveArgs {
  uint64_t seed = 0;
  int n = 30;
  int nu = 10;
  double c = 1.0;
  std::vector<Accel> methods{Accel::none};
  long max_iter = 1'000'000;
  double tol = 1e-8;
  int accel_cadence = 3;
  std::string out = "-";
};
int run_bp_solve(const BpSolveArgs& args);

/// Batch benchmark with per-method statistics.
struct BpBenchArgs {
  int instances = 0;
  int n = 30;
  int nu = 10;
  double c = 1.0;
  uint64_t seed_base = 1;
  std::vector<Accel> methods{Accel::none, Accel::lt};
  long max_iter = 1'000'000;
  double tol = 1e-8;
  int accel_cadence = 3;
  int workers = 0;  // 0 = runtime default, 1 = serial reference path
  std::string out = "-";
};
int run_bp_bench(const BpBenchArgs& args);

/// "none,lt" -> {none, lt}; nullopt on an unknown token.
std::optional<std::vector<Accel>> parse_accel_list(const std::string& csv);

}  // namespace spiral::cli
