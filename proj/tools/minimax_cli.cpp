#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minimax.h"

namespace {

int status_to_exit(mm_status s) {
  switch (s) {
    case MM_OK:
      return 0;
    case MM_ERR_USAGE:
      return 2;
    default:
      return 1;
  }
}

struct ProblemHandle {
  mm_problem *p = nullptr;
  ~ProblemHandle() { mm_problem_free(p); }
};

struct TraceHandle {
  mm_trace *t = nullptr;
  ~TraceHandle() { mm_trace_free(t); }
};

struct RunFlags {
  std::string problem;
  std::string solver = "lsvre";
  std::string params;
  std::string mode = "practical";
  std::string metrics = "grad_norm";
  std::string out;
  std::uint64_t seed = 0;
  std::int64_t budget_sfo = 0;
  std::int64_t budget_iters = 0;
  std::int64_t trace_every = 0;
};

int execute_run(const RunFlags &flags, const std::string &solver, double tau_override,
                mm_trace **out_trace, bool print_final) {
  ProblemHandle prob;
  mm_status st = mm_problem_create(flags.problem.c_str(), flags.seed, &prob.p);
  if (st != MM_OK) {
    std::fprintf(stderr, "error: %s\n", mm_last_error());
    return status_to_exit(st);
  }
  std::string params = flags.params;
  if (tau_override > 0.0) {
    if (!params.empty()) params += ",";
    params += "tau=" + std::to_string(tau_override);
  }
  TraceHandle trace;
  st = mm_run(prob.p, solver.c_str(), params.c_str(), flags.mode.c_str(),
              flags.budget_sfo, flags.budget_iters, flags.trace_every, flags.seed,
              flags.metrics.c_str(), &trace.t);
  if (st != MM_OK) {
    std::fprintf(stderr, "error: %s\n", mm_last_error());
    return status_to_exit(st);
  }
  if (!flags.out.empty()) {
    st = mm_trace_write_csv(trace.t, flags.out.c_str());
    if (st != MM_OK) {
      std::fprintf(stderr, "error: %s\n", mm_last_error());
      return status_to_exit(st);
    }
  }
  if (print_final) {
    const size_t rows = mm_trace_rows(trace.t);
    std::printf("solver=%s sfo=%" PRId64, solver.c_str(), mm_trace_total_sfo(trace.t));
    if (rows > 0) {
      for (size_t j = 0; j < mm_trace_num_metrics(trace.t); ++j) {
        double v = 0.0;
        mm_trace_metric(trace.t, rows - 1, j, &v);
        std::printf(" %s=%.17g", mm_trace_metric_name(trace.t, j), v);
      }
    }
    std::printf("\n");
  }
  if (out_trace) {
    *out_trace = trace.t;
    trace.t = nullptr;
  }
  return 0;
}

double final_metric(mm_trace *t, size_t j) {
  const size_t rows = mm_trace_rows(t);
  double v = 0.0;
  if (rows > 0) mm_trace_metric(t, rows - 1, j, &v);
  return v;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"finite-sum minimax solver benchmark"};
  app.require_subcommand(1);

  RunFlags flags;
  std::vector<double> sweep_tau;

  auto add_common = [&](CLI::App *cmd, bool need_out) {
    cmd->add_option("--problem", flags.problem, "problem spec family:key=value,...")
        ->required();
    cmd->add_option("--seed", flags.seed, "base RNG seed");
    auto *bs = cmd->add_option("--budget-sfo", flags.budget_sfo, "oracle-call budget");
    cmd->add_option("--budget-iters", flags.budget_iters, "iteration budget")
        ->excludes(bs);
    cmd->add_option("--trace-every", flags.trace_every,
                    "checkpoint every k iterations (0 = endpoints only)");
    cmd->add_option("--params", flags.params, "solver overrides key=value,...");
    cmd->add_option("--mode", flags.mode, "schedule mode: practical|theory")
        ->check(CLI::IsMember({"practical", "theory"}));
    cmd->add_option("--metrics", flags.metrics,
                    "comma list: dist_sq,grad_norm,grad_mapping,duality_gap,value");
    if (need_out) cmd->add_option("--out", flags.out, "trace CSV path");
  };

  auto *run = app.add_subcommand("run", "run one solver and write a trace");
  add_common(run, true);
  run->add_option("--solver", flags.solver, "eg|lsvre|alsvre");
  run->add_option("--sweep-tau", sweep_tau,
                  "step-size grid; runs each and reports the best final metric");

  auto *bench = app.add_subcommand("bench", "equal-budget solver comparison");
  add_common(bench, false);
  std::vector<std::string> bench_solvers = {"eg", "lsvre", "alsvre"};
  int bench_seeds = 1;
  std::string out_dir = ".";
  bench->add_option("--solvers", bench_solvers, "solvers to compare (>= 2)");
  bench->add_option("--seeds", bench_seeds, "number of consecutive seeds");
  bench->add_option("--out-dir", out_dir, "directory for per-run CSVs and summary");

  auto *verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite = "all";
  verify->add_option("suite", suite,
                     "projections|smoothness|saddles|zero_chain|lemmas|all");

  auto *gen = app.add_subcommand("gen-data", "write a synthetic data file");
  std::string kind = "wireless", gen_out;
  std::int64_t gen_n = 500;
  double gen_lo = 0.0, gen_hi = 10.0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", kind, "dataset kind")->check(CLI::IsMember({"wireless"}));
  gen->add_option("--n", gen_n, "vector length")->required();
  gen->add_option("--lo", gen_lo, "lower bound");
  gen->add_option("--hi", gen_hi, "upper bound");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  if (run->parsed()) {
    if (sweep_tau.empty()) return execute_run(flags, flags.solver, 0.0, nullptr, true);
    double best_tau = 0.0, best_val = 0.0;
    bool have_best = false;
    const std::string base_out = flags.out;
    for (double tau : sweep_tau) {
      RunFlags f = flags;
      if (!base_out.empty()) f.out = base_out + ".tau" + std::to_string(tau);
      mm_trace *t = nullptr;
      const int rc = execute_run(f, flags.solver, tau, &t, false);
      if (rc != 0) return rc;
      const double v = final_metric(t, 0);
      std::printf("tau=%.17g final=%.17g\n", tau, v);
      if (!have_best || v < best_val) {
        best_val = v;
        best_tau = tau;
        have_best = true;
      }
      mm_trace_free(t);
    }
    std::printf("best tau=%.17g final=%.17g\n", best_tau, best_val);
    return 0;
  }

  if (bench->parsed()) {
    if (bench_solvers.size() < 2) {
      std::fprintf(stderr, "error: bench needs at least two solvers\n");
      return 2;
    }
    std::string summary = "solver,seed,final_metric\n";
    std::map<std::string, double> mean;
    for (const auto &solver : bench_solvers) {
      double acc = 0.0;
      for (int s = 0; s < bench_seeds; ++s) {
        RunFlags f = flags;
        f.seed = flags.seed + static_cast<std::uint64_t>(s);
        f.out = out_dir + "/" + solver + "_seed" + std::to_string(f.seed) + ".csv";
        mm_trace *t = nullptr;
        const int rc = execute_run(f, solver, 0.0, &t, false);
        if (rc != 0) return rc;
        const double v = final_metric(t, 0);
        acc += v;
        char line[160];
        std::snprintf(line, sizeof(line), "%s,%" PRIu64 ",%.17g\n", solver.c_str(),
                      f.seed, v);
        summary += line;
        mm_trace_free(t);
      }
      mean[solver] = acc / bench_seeds;
    }
    summary += "solver,mean_final_metric,-\n";
    for (const auto &solver : bench_solvers) {
      char line[160];
      std::snprintf(line, sizeof(line), "%s,%.17g,-\n", solver.c_str(), mean[solver]);
      summary += line;
      std::printf("%s mean final metric %.17g\n", solver.c_str(), mean[solver]);
    }
    const std::string path = out_dir + "/summary.csv";
    FILE *fp = std::fopen(path.c_str(), "wb");
    if (!fp || std::fwrite(summary.data(), 1, summary.size(), fp) != summary.size()) {
      if (fp) std::fclose(fp);
      std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
      return 1;
    }
    std::fclose(fp);
    return 0;
  }

  if (verify->parsed()) {
    int failed = 0;
    std::vector<char> buf(65536);
    const mm_status st = mm_verify(suite.c_str(), &failed, buf.data(), buf.size());
    if (st != MM_OK) {
      std::fprintf(stderr, "error: %s\n", mm_last_error());
      return status_to_exit(st);
    }
    std::fputs(buf.data(), stdout);
    if (failed > 0) {
      std::printf("%d check(s) failed\n", failed);
      return 1;
    }
    std::printf("all checks passed\n");
    return 0;
  }

  if (gen->parsed()) {
    const mm_status st =
        mm_gen_wireless(gen_n, gen_lo, gen_hi, gen_seed, gen_out.c_str());
    if (st != MM_OK) {
      std::fprintf(stderr, "error: %s\n", mm_last_error());
      return status_to_exit(st);
    }
    return 0;
  }

  return 2;
}
