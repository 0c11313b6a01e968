#include "spiral/batch.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spiral {

namespace {

InstanceResult run_one(const BatchOptions& opts, int i) {
  InstanceResult row;
  row.seed = opts.seed_base + static_cast<uint64_t>(i);
  const BasisPursuitInstance inst =
      random_bp_instance(opts.n, opts.nu, opts.c, row.seed);

  row.outcomes.reserve(opts.methods.size());
  for (Accel m : opts.methods) {
    BpSolveOptions so;
    so.accel = m;
    so.max_iter = opts.max_iter;
    so.tol = opts.tol;
    so.accel_cadence = opts.accel_cadence;
    const BpSolveResult r = bp_solve(inst, so);
    MethodOutcome o;
    o.iterations = r.iterations;
    o.solved = r.solved;
    o.objective = r.objective;
    o.accel_attempts = r.accel_attempts;
    o.accel_accepted = r.accel_accepted;
    row.outcomes.push_back(o);
  }
  return row;
}

void validate(const BatchOptions& opts) {
  if (opts.instances < 1)
    throw std::invalid_argument("batch: need at least one instance");
  if (opts.methods.empty())
    throw std::invalid_argument("batch: need at least one method");
}

}  // namespace

std::vector<InstanceResult> run_batch_serial(const BatchOptions& opts) {
  validate(opts);
  std::vector<InstanceResult> rows(opts.instances);
  for (int i = 0; i < opts.instances; ++i) rows[i] = run_one(opts, i);
  return rows;
}

std::vector<InstanceResult> run_batch_parallel(const BatchOptions& opts,
                                               int workers) {
#ifdef _OPENMP
  validate(opts);
  std::vector<InstanceResult> rows(opts.instances);
  std::exception_ptr error;

  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < opts.instances; ++i) {
    try {
      rows[i] = run_one(opts, i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return rows;
#else
  (void)workers;
  return run_batch_serial(opts);
#endif
}

double linear_quantile(std::vector<double> values, double q) {
  if (values.empty())
    throw std::invalid_argument("linear_quantile: empty input");
  if (!(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("linear_quantile: q must be in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= values.size()) return values.back();
  return values[lo] + (h - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
}

std::vector<BenchStats> summarize_batch(const BatchOptions& opts,
                                        const std::vector<InstanceResult>& rows) {
  const std::size_t m = opts.methods.size();
  std::vector<BenchStats> stats(m);
  std::vector<std::vector<double>> iters(m);

  for (std::size_t j = 0; j < m; ++j) {
    stats[j].method = to_string(opts.methods[j]);
    iters[j].reserve(rows.size());
  }

  for (const InstanceResult& row : rows) {
    long best = std::numeric_limits<long>::max();
    for (const MethodOutcome& o : row.outcomes) best = std::min(best, o.iterations);
    int tied = 0;
    for (const MethodOutcome& o : row.outcomes)
      if (o.iterations == best) ++tied;

    for (std::size_t j = 0; j < m; ++j) {
      const MethodOutcome& o = row.outcomes[j];
      iters[j].push_back(static_cast<double>(o.iterations));
      if (o.solved) ++stats[j].solved_count;
      if (o.iterations == best) stats[j].wins += 1.0 / tied;
    }
  }

  for (std::size_t j = 0; j < m; ++j) {
    const auto [lo, hi] = std::minmax_element(iters[j].begin(), iters[j].end());
    stats[j].min_iters = static_cast<long>(*lo);
    stats[j].max_iters = static_cast<long>(*hi);
    stats[j].q1 = linear_quantile(iters[j], 0.25);
    stats[j].median = linear_quantile(iters[j], 0.50);
    stats[j].q3 = linear_quantile(iters[j], 0.75);
  }
  return stats;
}

}  // namespace spiral
