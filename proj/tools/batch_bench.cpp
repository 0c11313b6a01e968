// Times the serial reference batch runner against the OpenMP fan-out on the
// same instance set and verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "spiral/batch.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool same_results(const std::vector<spiral::InstanceResult>& a,
                  const std::vector<spiral::InstanceResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].seed != b[i].seed) return false;
    if (a[i].outcomes.size() != b[i].outcomes.size()) return false;
    for (std::size_t j = 0; j < a[i].outcomes.size(); ++j) {
      const auto& x = a[i].outcomes[j];
      const auto& y = b[i].outcomes[j];
      if (x.iterations != y.iterations || x.solved != y.solved ||
          x.objective != y.objective)
        return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  spiral::BatchOptions opts;
  opts.instances = argc > 1 ? std::atoi(argv[1]) : 64;
  opts.n = argc > 2 ? std::atoi(argv[2]) : 30;
  opts.nu = argc > 3 ? std::atoi(argv[3]) : 10;
  const int workers = argc > 4 ? std::atoi(argv[4]) : 0;
  opts.c = 1.0;
  opts.seed_base = 1;
  opts.methods = {spiral::Accel::none, spiral::Accel::lt};

  std::printf("batch: %d instances, n=%d nu=%d, methods=none,lt\n",
              opts.instances, opts.n, opts.nu);

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = spiral::run_batch_serial(opts);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = spiral::run_batch_parallel(opts, workers);
  const double t_parallel = seconds_since(t0);

  if (!same_results(serial, parallel)) {
    std::printf("FAIL: serial and parallel runners disagree\n");
    return 1;
  }

  std::printf("serial   %8.3f s\n", t_serial);
  std::printf("parallel %8.3f s  (speedup %.2fx)\n", t_parallel,
              t_serial / t_parallel);
  return 0;
}
