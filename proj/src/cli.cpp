#include "spiral/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "spiral/trajectory_io.hpp"

namespace spiral::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

int write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return kExitUsage;
  }
  os << content;
  return kExitOk;
}

struct FeasProblem {
  std::shared_ptr<const SetOracle> A, B;
};

std::optional<FeasProblem> make_feas_problem(const std::string& name,
                                             double theta) {
  Vec up(2);
  up << 0.0, 1.0;
  FeasProblem p;
  p.A = std::make_shared<Hyperplane>(up, 0.0);
  if (name == "two-lines") {
    p.B = std::make_shared<LineAtAngle>(theta);
  } else if (name == "circle-line") {
    p.B = std::make_shared<Sphere>(Vec::Zero(2), 1.0);
  } else if (name == "exp-graph") {
    p.B = std::make_shared<FunctionGraph>(
        [](double y) { return std::expm1(y); },
        [](double y) { return std::exp(y); }, -10.0, 10.0);
  } else {
    return std::nullopt;
  }
  return p;
}

}  // namespace

int run_feas(const FeasArgs& args) {
  const auto prob = make_feas_problem(args.problem, args.theta);
  if (!prob) {
    std::cerr << "error: unknown problem '" << args.problem << "'\n";
    return kExitUsage;
  }
  if (args.x0.size() != 2) {
    std::cerr << "error: --x0 must have exactly 2 coordinates\n";
    return kExitUsage;
  }
  if (args.max_iter < 1 || !(args.tol > 0.0)) {
    std::cerr << "error: need --max-iter >= 1 and --tol > 0\n";
    return kExitUsage;
  }

  const SetOracle& A = *prob->A;
  const SetOracle& B = *prob->B;
  SteppingFn step;
  if (args.method == "dr") {
    step = dr_stepper(A, B);
  } else if (args.method == "crm") {
    step = crm_stepper(A, B, args.eps_col);
  } else if (args.method == "lt") {
    OperatorFn T = [&A, &B](const Vec& p) { return dr_apply(A, B, p); };
    step = lt_stepper(std::move(T), args.eps_col);
  } else {
    std::cerr << "error: unknown method '" << args.method << "'\n";
    return kExitUsage;
  }

  Vec x0(2);
  x0 << args.x0[0], args.x0[1];

  Trajectory traj;
  try {
    traj = iterate(step, x0, args.max_iter, step_norm_stop(args.tol));
  } catch (const NonFiniteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  }

  std::vector<Vec> shadows;
  shadows.reserve(traj.points.size());
  for (const Vec& p : traj.points) shadows.push_back(A.project(p));

  std::ostringstream csv;
  write_trajectory_csv(csv, traj, &shadows);
  const int rc = write_output(args.out, csv.str());
  if (rc != kExitOk) return rc;
  return traj.status == StopStatus::converged ? kExitOk : kExitCap;
}

namespace {

struct CheckRow {
  std::string label;
  int samples = 0;
  double max_residual = 0.0;
  bool passed = true;
};

void print_rows(const CheckArgs& args, const std::vector<CheckRow>& rows,
                bool all_passed) {
  for (const CheckRow& r : rows)
    std::printf("checker=%s instance=%s samples=%d max_residual=%.3e tol=%.1e %s\n",
                r.label.c_str(), args.instance.c_str(), r.samples,
                r.max_residual, args.tol, r.passed ? "PASS" : "FAIL");
  std::printf("overall %s\n", all_passed ? "PASS" : "FAIL");
}

}  // namespace

int run_check(const CheckArgs& args) {
  GraphProblem gp;
  double y_lo, y_hi, rho_lo, rho_hi;
  if (args.instance == "two-lines") {
    if (args.theta == 0.0) {
      std::cerr << "error: two-lines checks need a nonzero --theta\n";
      return kExitUsage;
    }
    gp = make_two_lines_problem(args.theta);
    y_lo = -3.0, y_hi = 3.0, rho_lo = -3.0, rho_hi = 3.0;
  } else if (args.instance == "exp-graph") {
    gp = make_exp_graph_problem();
    y_lo = -1.5, y_hi = 1.5, rho_lo = -2.0, rho_hi = 2.0;
  } else {
    std::cerr << "error: unknown instance '" << args.instance << "'\n";
    return kExitUsage;
  }
  if (args.samples < 0) {
    std::cerr << "error: --samples must be >= 0\n";
    return kExitUsage;
  }

  std::mt19937_64 rng(args.seed);
  std::uniform_real_distribution<double> uy(y_lo, y_hi), urho(rho_lo, rho_hi);
  const auto sample_point = [&] {
    Vec p(2);
    p << uy(rng), urho(rng);
    return p;
  };

  const GraphLyapunov& L = gp.lyap;
  const SetOracle& A = *gp.A;
  const SetOracle& B = *gp.B;
  std::vector<CheckRow> rows;

  if (args.checker == "spiraling") {
    CheckRow row{"spiraling", args.samples, 0.0, true};
    for (int i = 0; i < args.samples; ++i) {
      const auto rep = check_spiraling(L, A, B, sample_point(), args.tol);
      row.max_residual = std::max(row.max_residual, rep.residual);
      row.passed = row.passed && rep.passed;
    }
    rows.push_back(row);
  } else if (args.checker == "bisectors") {
    const std::pair<BisectorCase, const char*> cases[] = {
        {BisectorCase::T_AB, "bisectors:T_AB"},
        {BisectorCase::P_A, "bisectors:P_A"},
        {BisectorCase::P_B, "bisectors:P_B"},
        {BisectorCase::T_BA, "bisectors:T_BA"}};
    for (const auto& [which, label] : cases) {
      CheckRow row{label, args.samples, 0.0, true};
      for (int i = 0; i < args.samples; ++i) {
        const auto rep =
            check_bisector_theorem(L, A, B, sample_point(), which, args.tol);
        row.max_residual = std::max(row.max_residual, rep.residual);
        row.passed = row.passed && rep.passed;
      }
      rows.push_back(row);
    }
  } else if (args.checker == "mss") {
    // CRM triples (x, R_A x, R_B R_A x) fitted at T_AB x, P_A x, P_B R_A x,
    // and lt triples (x, 2x+ - x, anchor) fitted at x+ and x++. Degenerate
    // draws (colinear triple, probe at the center) are resampled.
    CheckRow crm_row{"mss:crm", 0, 0.0, true};
    CheckRow lt_row{"mss:lt", 0, 0.0, true};
    const long cap = 100L * std::max(args.samples, 1);
    long attempts = 0;
    while (crm_row.samples < args.samples && attempts++ < cap) {
      const Vec p = sample_point();
      const Vec ra = A.reflect(p);
      const Vec rba = B.reflect(ra);
      const auto center = circumcenter(p, ra, rba);
      if (colinearity_test(p, ra, rba).is_colinear || !center) continue;
      const Vec probes[] = {0.5 * (p + rba), A.project(p), B.project(ra)};
      try {
        for (const Vec& probe : probes) {
          const auto rep = check_mss_parallelism(L, {p, ra, rba}, *center,
                                                 probe, args.tol);
          crm_row.max_residual = std::max(crm_row.max_residual, rep.residual);
          crm_row.passed = crm_row.passed && rep.passed;
        }
      } catch (const DegenerateGradient&) {
        continue;
      }
      ++crm_row.samples;
    }
    attempts = 0;
    while (lt_row.samples < args.samples && attempts++ < cap) {
      const Vec p = sample_point();
      IterateWindow w;
      w.x = p;
      w.x_plus = dr_apply(A, B, p);
      w.x_plus_plus = dr_apply(A, B, w.x_plus);
      const auto anchor = lt_anchor(w);
      const auto center = lt_center(w);
      if (!anchor || !center) continue;
      try {
        for (const Vec& probe : {w.x_plus, w.x_plus_plus}) {
          const auto rep = check_mss_parallelism(
              L, {w.x, 2.0 * w.x_plus - w.x, *anchor}, *center, probe, args.tol);
          lt_row.max_residual = std::max(lt_row.max_residual, rep.residual);
          lt_row.passed = lt_row.passed && rep.passed;
        }
      } catch (const DegenerateGradient&) {
        continue;
      }
      ++lt_row.samples;
    }
    rows.push_back(crm_row);
    rows.push_back(lt_row);
  } else if (args.checker == "newton") {
    CheckRow row{"newton", args.samples, 0.0, true};
    try {
      for (int i = 0; i < args.samples; ++i) {
        const auto ne = newton_equivalence(L, uy(rng));
        row.max_residual = std::max(row.max_residual, ne.residual);
        row.passed = row.passed && ne.residual <= args.tol;
      }
    } catch (const SingularGradient& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    rows.push_back(row);
  } else {
    std::cerr << "error: unknown checker '" << args.checker << "'\n";
    return kExitUsage;
  }

  bool all = true;
  for (const CheckRow& r : rows) all = all && r.passed;
  print_rows(args, rows, all);
  return all ? kExitOk : kExitCap;
}

std::optional<std::vector<Accel>> parse_accel_list(const std::string& csv) {
  std::vector<Accel> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto a = accel_from_string(tok);
    if (!a) return std::nullopt;
    out.push_back(*a);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

namespace {

ordered_json method_record(Accel m, const BpSolveResult& r, bool with_x) {
  ordered_json rec;
  rec["method"] = to_string(m);
  rec["iterations"] = r.iterations;
  rec["solved"] = r.solved;
  rec["objective"] = r.objective;
  rec["accel_attempts"] = r.accel_attempts;
  rec["accel_accepted"] = r.accel_accepted;
  rec["accel_colinear_skips"] = r.accel_colinear_skips;
  rec["objective_evals"] = r.objective_evals;
  if (with_x) {
    std::vector<double> x(r.x.data(), r.x.data() + r.x.size());
    rec["x"] = x;
  }
  return rec;
}

}  // namespace

int run_bp_solve(const BpSolveArgs& args) {
  if (args.methods.empty() || args.nu >= args.n || args.nu < 1 ||
      !(args.c > 0.0) || args.max_iter < 1) {
    std::cerr << "error: invalid bp solve parameters\n";
    return kExitUsage;
  }

  const BasisPursuitInstance inst =
      random_bp_instance(args.n, args.nu, args.c, args.seed);

  ordered_json doc;
  doc["mode"] = "bp-solve";
  doc["seed"] = args.seed;
  doc["n"] = args.n;
  doc["nu"] = args.nu;
  doc["c"] = args.c;
  doc["max_iter"] = args.max_iter;
  doc["tol"] = args.tol;
  doc["accel_cadence"] = args.accel_cadence;
  doc["methods"] = ordered_json::array();

  bool all_solved = true;
  for (Accel m : args.methods) {
    BpSolveOptions so;
    so.accel = m;
    so.max_iter = args.max_iter;
    so.tol = args.tol;
    so.accel_cadence = args.accel_cadence;
    const BpSolveResult r = bp_solve(inst, so);
    all_solved = all_solved && r.solved;
    doc["methods"].push_back(method_record(m, r, /*with_x=*/true));
  }

  const int rc = write_output(args.out, doc.dump(2) + "\n");
  if (rc != kExitOk) return rc;
  return all_solved ? kExitOk : kExitCap;
}

int run_bp_bench(const BpBenchArgs& args) {
  if (args.instances < 1 || args.methods.empty() || args.nu >= args.n ||
      args.nu < 1 || !(args.c > 0.0) || args.max_iter < 1) {
    std::cerr << "error: invalid bp bench parameters\n";
    return kExitUsage;
  }

  BatchOptions opts;
  opts.instances = args.instances;
  opts.n = args.n;
  opts.nu = args.nu;
  opts.c = args.c;
  opts.seed_base = args.seed_base;
  opts.methods = args.methods;
  opts.max_iter = args.max_iter;
  opts.tol = args.tol;
  opts.accel_cadence = args.accel_cadence;

  const std::vector<InstanceResult> rows =
      args.workers == 1 ? run_batch_serial(opts)
                        : run_batch_parallel(opts, args.workers);
  const std::vector<BenchStats> stats = summarize_batch(opts, rows);

  ordered_json doc;
  doc["mode"] = "bp-bench";
  doc["instances"] = args.instances;
  doc["n"] = args.n;
  doc["nu"] = args.nu;
  doc["c"] = args.c;
  doc["seed_base"] = args.seed_base;
  doc["max_iter"] = args.max_iter;
  doc["tol"] = args.tol;
  doc["accel_cadence"] = args.accel_cadence;

  doc["stats"] = ordered_json::array();
  for (const BenchStats& st : stats) {
    ordered_json rec;
    rec["method"] = st.method;
    rec["wins"] = st.wins;
    rec["solved"] = st.solved_count;
    rec["min"] = st.min_iters;
    rec["q1"] = st.q1;
    rec["median"] = st.median;
    rec["q3"] = st.q3;
    rec["max"] = st.max_iters;
    doc["stats"].push_back(rec);
  }

  doc["instances_detail"] = ordered_json::array();
  for (const InstanceResult& row : rows) {
    ordered_json rec;
    rec["seed"] = row.seed;
    for (std::size_t j = 0; j < opts.methods.size(); ++j) {
      const MethodOutcome& o = row.outcomes[j];
      ordered_json mo;
      mo["iterations"] = o.iterations;
      mo["solved"] = o.solved;
      mo["objective"] = o.objective;
      rec[to_string(opts.methods[j])] = mo;
    }
    doc["instances_detail"].push_back(rec);
  }

  return write_output(args.out, doc.dump(2) + "\n");
}

}  // namespace spiral::cli
