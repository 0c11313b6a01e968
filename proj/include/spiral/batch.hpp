#pragma once

#include <vector>

#include "spiral/basis_pursuit.hpp"

namespace spiral {

struct BatchOptions {
  int instances = 0;
  int n = 30;
  int nu = 10;
  double c = 1.0;
  uint64_t seed_base = 1;
  std::vector<Accel> methods;
  long max_iter = 1'000'000;
  double tol = 1e-8;
  int accel_cadence = 3;
};

struct MethodOutcome {
  long iterations = 0;
  bool solved = false;
  double objective = 0.0;
  long accel_attempts = 0;
  long accel_accepted = 0;
};

struct InstanceResult {
  uint64_t seed = 0;
  std::vector<MethodOutcome> outcomes;  // aligned with BatchOptions::methods
};

/// Per-method batch summary. Quantiles are linear-interpolation quantiles of
/// the iteration counts; wins may be fractional, since an m-way tie on the
/// fewest passes credits 1/m to each tied method.
struct BenchStats {
  std::string method;
  double wins = 0.0;
  int solved_count = 0;
  long min_iters = 0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  long max_iters = 0;
};

/// Instance i uses seed seed_base + i; results are keyed by position, so the
/// output is identical no matter how the loop is scheduled.
std::vector<InstanceResult> run_batch_serial(const BatchOptions& opts);

/// OpenMP fan-out over instances; workers <= 0 picks the runtime default.
/// Falls back to the serial loop when built without OpenMP.
std::vector<InstanceResult> run_batch_parallel(const BatchOptions& opts,
                                               int workers);

std::vector<BenchStats> summarize_batch(const BatchOptions& opts,
                                        const std::vector<InstanceResult>& rows);

/// Linear-interpolation quantile of the values (q in [0, 1]); the input need
/// not be sorted.
double linear_quantile(std::vector<double> values, double q);

}  // namespace spiral
