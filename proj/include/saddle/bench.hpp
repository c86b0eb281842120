#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "saddle/errors.hpp"
#include "saddle/problems.hpp"
#include "saddle/solvers.hpp"

namespace saddle::bench {

inline constexpr const char* kVersion = "0.1.0";

inline std::string build_id() {
  return std::string("saddle-bench ") + kVersion + " (" +
#if defined(__clang__)
         "clang " __clang_version__
#elif defined(__GNUC__)
         "gcc " __VERSION__
#else
         "unknown compiler"
#endif
         + ")";
}

enum class ReferenceMode { none, long_run, oracle_ista };
enum class OutputFormat { csv, json };

inline const char* reference_mode_name(ReferenceMode m) {
  switch (m) {
    case ReferenceMode::none: return "none";
    case ReferenceMode::long_run: return "long_run";
    case ReferenceMode::oracle_ista: return "oracle_ista";
  }
  return "?";
}

inline std::optional<ReferenceMode> reference_mode_from_name(const std::string& s) {
  if (s == "none") return ReferenceMode::none;
  if (s == "long_run") return ReferenceMode::long_run;
  if (s == "oracle_ista") return ReferenceMode::oracle_ista;
  return std::nullopt;
}

/// Which generated instance to benchmark: family by (kind, example), a seed,
/// the desk-scale switch, and explicit dimension overrides (which win over
/// the desk presets).
///
/// Desk presets: matgame4 200x400; lasso1 (50, 200, 5); lasso2 (250, 400, 50);
/// lasso3/4 (250, 1000, 25). matgame1-3 already run at desk scale.
struct ProblemChoice {
  std::string kind = "matgame";  // "matgame" | "lasso"
  int example = 1;               // 1..4
  std::uint64_t seed = 0;
  bool desk = false;
  std::optional<std::size_t> m, n, s;

  GeneratorSpec to_spec() const {
    if (example < 1 || example > 4) throw ConfigError("problem example must be 1..4");
    GeneratorSpec spec;
    spec.seed = seed;
    if (kind == "matgame") {
      constexpr ProblemFamily fams[] = {ProblemFamily::matgame1, ProblemFamily::matgame2,
                                        ProblemFamily::matgame3, ProblemFamily::matgame4};
      spec.family = fams[example - 1];
    } else if (kind == "lasso") {
      constexpr ProblemFamily fams[] = {ProblemFamily::lasso1, ProblemFamily::lasso2,
                                        ProblemFamily::lasso3, ProblemFamily::lasso4};
      spec.family = fams[example - 1];
    } else {
      throw ConfigError("problem kind must be 'matgame' or 'lasso'");
    }
    if (desk) {
      switch (spec.family) {
        case ProblemFamily::matgame4: spec.m = 200; spec.n = 400; break;
        case ProblemFamily::lasso1: spec.m = 50; spec.n = 200; spec.s = 5; break;
        case ProblemFamily::lasso2: spec.m = 250; spec.n = 400; spec.s = 50; break;
        case ProblemFamily::lasso3:
        case ProblemFamily::lasso4: spec.m = 250; spec.n = 1000; spec.s = 25; break;
        default: break;
      }
    }
    if (m) spec.m = m;
    if (n) spec.n = n;
    if (s) spec.s = s;
    return spec;
  }
};

/// One benchmark run: a label, the algorithm, and optional overrides applied
/// on top of the stock settings from default_config.
struct RunSpec {
  std::string label;
  Algo algo = Algo::pda;
  std::optional<double> tau, sigma, theta, psi, a, b, gamma, beta, delta, mu, tau0;

  SolverConfig materialize(const SaddleProblem& problem, double L) const {
    SolverConfig cfg = default_config(algo, problem, L);
    if (tau) cfg.tau = *tau;
    if (sigma) cfg.sigma = *sigma;
    if (theta) cfg.theta = *theta;
    if (psi) cfg.psi = *psi;
    if (a) cfg.a_seq = SequenceSpec::constant(*a);
    if (b) cfg.b_seq = SequenceSpec::constant(*b);
    if (gamma) cfg.gamma = *gamma;
    if (beta) cfg.beta = *beta;
    if (delta) cfg.delta = *delta;
    if (mu) cfg.mu = *mu;
    if (tau0) cfg.tau0 = *tau0;
    return cfg;
  }
};

struct BenchConfig {
  ProblemChoice problem;
  std::vector<RunSpec> runs;
  long max_iter = 5000;
  std::optional<double> max_seconds;
  long record_every = 10;
  std::optional<double> target_metric;
  ReferenceMode reference = ReferenceMode::none;
  std::string out_path = "-";  // "-" writes to stdout
  std::optional<OutputFormat> format;
};

struct BenchReport {
  // problem fingerprint
  std::string kind;
  int example = 1;
  std::uint64_t seed = 0;
  bool desk = false;
  std::size_t m = 0, n = 0;
  std::optional<std::size_t> s;
  double opnorm = 0.0;
  std::optional<double> phi_star;
  std::string build;

  struct Run {
    std::string label;
    Algo algo = Algo::pda;
    RunTrace trace;
  };
  std::vector<Run> runs;
};

/// Proximal-gradient (ISTA) reference for a LASSO instance: fixed stepsize
/// 1/L^2, iterated until the gradient-mapping norm ||x - x_next||/step drops
/// to tol (in practice the iteration reaches an exact floating-point fixed
/// point). Independent of the primal-dual solvers it cross-checks.
inline double reference_ista(const SaddleProblem& problem, double tol = 1e-10,
                             long max_iter = 2000000) {
  if (problem.metric != MetricKind::objective_error) {
    throw ConfigError("reference_ista: not a LASSO-family problem");
  }
  const double L = operator_norm(problem.K);
  const double step = 1.0 / (L * L);
  Vector x(problem.K.cols(), 0.0);
  for (long it = 0; it < max_iter; ++it) {
    Vector r = problem.K.apply(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= problem.b[i];
    const Vector grad = problem.K.apply_transpose(r);
    Vector x_next = prox_l1(step, problem.lambda, lin_comb(1.0, x, -step, grad));
    const double gm = norm2(sub(x, x_next)) / step;
    x = std::move(x_next);
    if (gm <= tol) {
      return lasso_objective(problem.K, problem.b, problem.lambda, x);
    }
  }
  throw ConvergenceError(
      "reference_ista: gradient mapping did not reach tolerance; increase the budget",
      lasso_objective(problem.K, problem.b, problem.lambda, x));
}

/// Long-run reference: the smallest objective value seen along an NPDAL run
/// of ten times the benchmark budget. The objective is tracked off the
/// solver's cached forward product, so it costs no extra operator products.
inline double reference_long_run(const SaddleProblem& problem, long budget_iters) {
  if (problem.metric != MetricKind::objective_error) {
    throw ConfigError("reference_long_run: not a LASSO-family problem");
  }
  SolverConfig cfg = default_config(Algo::npdal, problem, 1.0);  // L unused by npdal
  cfg.max_iter = 10 * budget_iters;
  SolverState st = init_state(problem, cfg, problem.x0, problem.y0);
  auto objective = [&]() {
    double quad = 0.0;
    for (std::size_t i = 0; i < st.kx.size(); ++i) {
      const double d = st.kx[i] - problem.b[i];  // st.kx caches K x for the current x
      quad += d * d;
    }
    double l1 = 0.0;
    for (double e : st.x) l1 += std::abs(e);
    return 0.5 * quad + problem.lambda * l1;
  };
  double best = objective();
  for (long it = 0; it < cfg.max_iter; ++it) {
    step_npdal(problem, cfg, st);
    best = std::min(best, objective());
  }
  return best;
}

/// Reference objective value phi_* for a LASSO instance, by the chosen mode.
inline double compute_reference(const SaddleProblem& problem, ReferenceMode mode,
                                long budget_iters) {
  switch (mode) {
    case ReferenceMode::none:
      throw ConfigError("compute_reference: mode must not be 'none'");
    case ReferenceMode::long_run:
      return reference_long_run(problem, budget_iters);
    case ReferenceMode::oracle_ista:
      return reference_ista(problem);
  }
  throw ConfigError("compute_reference: unknown mode");
}

namespace detail {

inline std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::size_t parallelism(std::size_t n_runs) {
  std::size_t cap = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BENCH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = static_cast<std::size_t>(v);
  }
  return std::min(cap, std::max<std::size_t>(1, n_runs));
}

}  // namespace detail

/// Builds the problem, resolves the reference value if requested, runs every
/// configured solver (in parallel up to BENCH_THREADS), and assembles the
/// report in config order. Throws ConfigError for invalid configs; solver
/// failures are captured inside the per-run traces.
inline BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.max_iter <= 0) throw ConfigError("bench: budget must be positive");
  if (cfg.record_every <= 0) throw ConfigError("bench: record_every must be positive");
  std::set<std::string> labels;
  for (const RunSpec& r : cfg.runs) {
    if (!labels.insert(r.label).second) {
      throw ConfigError("bench: duplicate run label '" + r.label + "'");
    }
  }

  const GeneratorSpec spec = cfg.problem.to_spec();
  SaddleProblem problem = generate(spec);
  const double L = operator_norm(problem.K);

  BenchReport report;
  report.kind = cfg.problem.kind;
  report.example = cfg.problem.example;
  report.seed = cfg.problem.seed;
  report.desk = cfg.problem.desk;
  report.m = problem.K.rows();
  report.n = problem.K.cols();
  if (problem.metric == MetricKind::objective_error) {
    std::size_t support = 0;
    for (double w : problem.true_signal) support += (w != 0.0);
    report.s = support;
  }
  report.opnorm = L;
  report.build = build_id();

  if (cfg.reference != ReferenceMode::none) {
    if (problem.metric != MetricKind::objective_error) {
      throw ConfigError("bench: reference modes apply to LASSO problems only");
    }
    report.phi_star = compute_reference(problem, cfg.reference, cfg.max_iter);
    problem.reference_value = report.phi_star;
  }

  // Materialize and validate every config up front so a bad run spec fails
  // before any solver time is spent.
  std::vector<SolverConfig> solver_cfgs;
  solver_cfgs.reserve(cfg.runs.size());
  for (const RunSpec& r : cfg.runs) {
    SolverConfig sc = r.materialize(problem, L);
    sc.max_iter = cfg.max_iter;
    sc.record_every = cfg.record_every;
    sc.target_metric = cfg.target_metric;
    validate_config(problem, sc, L);
    solver_cfgs.push_back(std::move(sc));
  }

  report.runs.resize(cfg.runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfg.runs.size()) return;
      RunTrace trace =
          run(problem, solver_cfgs[i], problem.x0, problem.y0, {}, cfg.max_seconds);
      report.runs[i] = BenchReport::Run{cfg.runs[i].label, cfg.runs[i].algo, std::move(trace)};
    }
  };
  const std::size_t threads = detail::parallelism(cfg.runs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

/// CSV body: header `run,iter,time_sec,metric`, one row per record, floats
/// printed with 17 significant digits (so they reparse bit-identically).
inline void write_csv(const BenchReport& report, std::ostream& os) {
  os << "run,iter,time_sec,metric\n";
  for (const auto& r : report.runs) {
    for (const TraceRecord& rec : r.trace.records) {
      os << r.label << ',' << rec.iter << ',' << detail::fmt17(rec.elapsed_sec) << ','
         << detail::fmt17(rec.metric) << '\n';
    }
  }
}

inline nlohmann::json report_to_json(const BenchReport& report) {
  nlohmann::json jproblem{
      {"kind", report.kind}, {"example", report.example}, {"seed", report.seed},
      {"desk", report.desk}, {"m", report.m},             {"n", report.n},
      {"opnorm", report.opnorm},
  };
  if (report.s) jproblem["s"] = *report.s;
  if (report.phi_star) jproblem["phi_star"] = *report.phi_star;

  nlohmann::json jruns = nlohmann::json::array();
  for (const auto& r : report.runs) {
    nlohmann::json records = nlohmann::json::array();
    for (const TraceRecord& rec : r.trace.records) {
      records.push_back({rec.iter, rec.elapsed_sec, rec.metric});
    }
    nlohmann::json summary{
        {"final_iter", r.trace.records.empty() ? 0 : r.trace.records.back().iter},
        {"final_metric", r.trace.records.empty() ? 0.0 : r.trace.records.back().metric},
        {"total_backtracks", r.trace.total_backtracks},
        {"terminated_by", stop_reason_name(r.trace.terminated_by)},
    };
    if (!r.trace.error_message.empty()) summary["error"] = r.trace.error_message;
    jruns.push_back({{"label", r.label},
                     {"algo", algo_name(r.algo)},
                     {"records", std::move(records)},
                     {"summary", std::move(summary)}});
  }
  return nlohmann::json{{"problem", std::move(jproblem)},
                        {"environment", {{"build", report.build}}},
                        {"runs", std::move(jruns)}};
}

/// Inverse of report_to_json for the fields the report carries (summaries are
/// recomputed from the records on the way back in).
inline BenchReport report_from_json(const nlohmann::json& j) {
  BenchReport report;
  const auto& jp = j.at("problem");
  report.kind = jp.at("kind").get<std::string>();
  report.example = jp.at("example").get<int>();
  report.seed = jp.at("seed").get<std::uint64_t>();
  report.desk = jp.at("desk").get<bool>();
  report.m = jp.at("m").get<std::size_t>();
  report.n = jp.at("n").get<std::size_t>();
  report.opnorm = jp.at("opnorm").get<double>();
  if (jp.contains("s")) report.s = jp.at("s").get<std::size_t>();
  if (jp.contains("phi_star")) report.phi_star = jp.at("phi_star").get<double>();
  report.build = j.at("environment").at("build").get<std::string>();
  for (const auto& jr : j.at("runs")) {
    BenchReport::Run run;
    run.label = jr.at("label").get<std::string>();
    run.algo = algo_from_name(jr.at("algo").get<std::string>()).value_or(Algo::pda);
    for (const auto& rec : jr.at("records")) {
      run.trace.records.push_back(
          {rec.at(0).get<long>(), rec.at(1).get<double>(), rec.at(2).get<double>()});
    }
    const auto& js = jr.at("summary");
    run.trace.total_backtracks = js.at("total_backtracks").get<long>();
    const std::string reason = js.at("terminated_by").get<std::string>();
    run.trace.terminated_by = reason == "target_reached" ? StopReason::target_reached
                              : reason == "error"        ? StopReason::error
                                                         : StopReason::max_iter;
    if (js.contains("error")) run.trace.error_message = js.at("error").get<std::string>();
    report.runs.push_back(std::move(run));
  }
  return report;
}

/// Writes the report to `path` ("-" for stdout) in the requested format.
inline void emit_report(const BenchReport& report, OutputFormat format,
                        const std::string& path) {
  std::ofstream file;
  if (path != "-") {
    file.open(path, std::ios::binary);  // LF line endings on every platform
    if (!file) throw std::runtime_error("emit_report: cannot open '" + path + "' for writing");
  }
  std::ostream& os = (path == "-") ? std::cout : file;
  if (format == OutputFormat::csv) {
    write_csv(report, os);
  } else {
    os << report_to_json(report).dump(2) << '\n';
  }
  os.flush();
  if (path != "-" && !os) throw std::runtime_error("emit_report: write to '" + path + "' failed");
}

inline BenchConfig config_from_json(const nlohmann::json& j) {
  BenchConfig cfg;
  if (j.contains("problem")) {
    const auto& jp = j.at("problem");
    if (jp.contains("kind")) cfg.problem.kind = jp.at("kind").get<std::string>();
    if (jp.contains("example")) cfg.problem.example = jp.at("example").get<int>();
    if (jp.contains("seed")) cfg.problem.seed = jp.at("seed").get<std::uint64_t>();
    if (jp.contains("desk")) cfg.problem.desk = jp.at("desk").get<bool>();
    if (jp.contains("m")) cfg.problem.m = jp.at("m").get<std::size_t>();
    if (jp.contains("n")) cfg.problem.n = jp.at("n").get<std::size_t>();
    if (jp.contains("s")) cfg.problem.s = jp.at("s").get<std::size_t>();
  }
  if (j.contains("runs")) {
    for (const auto& jr : j.at("runs")) {
      RunSpec r;
      const std::string name = jr.at("algo").get<std::string>();
      const auto algo = algo_from_name(name);
      if (!algo) throw ConfigError("config: unknown algorithm '" + name + "'");
      r.algo = *algo;
      r.label = jr.contains("label") ? jr.at("label").get<std::string>() : name;
      auto opt = [&](const char* key, std::optional<double>& slot) {
        if (jr.contains(key)) slot = jr.at(key).get<double>();
      };
      opt("tau", r.tau); opt("sigma", r.sigma); opt("theta", r.theta); opt("psi", r.psi);
      opt("a", r.a); opt("b", r.b); opt("gamma", r.gamma); opt("beta", r.beta);
      opt("delta", r.delta); opt("mu", r.mu); opt("tau0", r.tau0);
      cfg.runs.push_back(std::move(r));
    }
  }
  if (j.contains("budget")) {
    const auto& jb = j.at("budget");
    if (jb.contains("max_iter")) cfg.max_iter = jb.at("max_iter").get<long>();
    if (jb.contains("max_seconds")) cfg.max_seconds = jb.at("max_seconds").get<double>();
  }
  if (j.contains("record_every")) cfg.record_every = j.at("record_every").get<long>();
  if (j.contains("target")) cfg.target_metric = j.at("target").get<double>();
  if (j.contains("reference")) {
    const std::string mode = j.at("reference").get<std::string>();
    const auto parsed = reference_mode_from_name(mode);
    if (!parsed) throw ConfigError("config: unknown reference mode '" + mode + "'");
    cfg.reference = *parsed;
  }
  if (j.contains("output")) {
    const auto& jo = j.at("output");
    if (jo.contains("path")) cfg.out_path = jo.at("path").get<std::string>();
    if (jo.contains("format")) {
      const std::string f = jo.at("format").get<std::string>();
      if (f == "csv") cfg.format = OutputFormat::csv;
      else if (f == "json") cfg.format = OutputFormat::json;
      else throw ConfigError("config: unknown output format '" + f + "'");
    }
  }
  return cfg;
}

inline nlohmann::json config_to_json(const BenchConfig& cfg) {
  nlohmann::json jp{{"kind", cfg.problem.kind},
                    {"example", cfg.problem.example},
                    {"seed", cfg.problem.seed},
                    {"desk", cfg.problem.desk}};
  if (cfg.problem.m) jp["m"] = *cfg.problem.m;
  if (cfg.problem.n) jp["n"] = *cfg.problem.n;
  if (cfg.problem.s) jp["s"] = *cfg.problem.s;

  nlohmann::json jruns = nlohmann::json::array();
  for (const RunSpec& r : cfg.runs) {
    nlohmann::json jr{{"label", r.label}, {"algo", algo_name(r.algo)}};
    auto put = [&](const char* key, const std::optional<double>& v) {
      if (v) jr[key] = *v;
    };
    put("tau", r.tau); put("sigma", r.sigma); put("theta", r.theta); put("psi", r.psi);
    put("a", r.a); put("b", r.b); put("gamma", r.gamma); put("beta", r.beta);
    put("delta", r.delta); put("mu", r.mu); put("tau0", r.tau0);
    jruns.push_back(std::move(jr));
  }

  nlohmann::json jbudget{{"max_iter", cfg.max_iter}};
  if (cfg.max_seconds) jbudget["max_seconds"] = *cfg.max_seconds;

  nlohmann::json j{{"problem", std::move(jp)},
                   {"runs", std::move(jruns)},
                   {"budget", std::move(jbudget)},
                   {"record_every", cfg.record_every},
                   {"reference", reference_mode_name(cfg.reference)},
                   {"output", {{"path", cfg.out_path}}}};
  if (cfg.target_metric) j["target"] = *cfg.target_metric;
  if (cfg.format) j["output"]["format"] = *cfg.format == OutputFormat::csv ? "csv" : "json";
  return j;
}

inline OutputFormat resolve_format(const BenchConfig& cfg) {
  if (cfg.format) return *cfg.format;
  const auto& p = cfg.out_path;
  if (p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0) return OutputFormat::json;
  return OutputFormat::csv;
}

}  // namespace saddle::bench
