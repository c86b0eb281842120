#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saddle/errors.hpp"
#include "saddle/linops.hpp"
#include "saddle/problems.hpp"

namespace saddle {

enum class Algo { pda, grpda, npda, anpda, npdal };

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::pda: return "pda";
    case Algo::grpda: return "grpda";
    case Algo::npda: return "npda";
    case Algo::anpda: return "anpda";
    case Algo::npdal: return "npdal";
  }
  return "?";
}

inline std::optional<Algo> algo_from_name(std::string_view s) {
  if (s == "pda") return Algo::pda;
  if (s == "grpda") return Algo::grpda;
  if (s == "npda") return Algo::npda;
  if (s == "anpda") return Algo::anpda;
  if (s == "npdal") return Algo::npdal;
  return std::nullopt;
}

/// Combination-coefficient sequence {a_k}: a constant or an explicit 1-based
/// table whose last entry persists past the end.
class SequenceSpec {
 public:
  SequenceSpec() = default;

  static SequenceSpec constant(double v) { return SequenceSpec(std::vector<double>{v}); }

  static SequenceSpec table(std::vector<double> v) {
    if (v.empty()) throw ConfigError("SequenceSpec::table: empty table");
    return SequenceSpec(std::move(v));
  }

  /// Value at 1-based index k.
  double at(std::size_t k) const {
    if (k == 0) throw ConfigError("SequenceSpec::at: index is 1-based");
    return k <= values_.size() ? values_[k - 1] : values_.back();
  }

  double sup() const {
    double m = values_.front();
    for (double v : values_) m = std::max(m, v);
    return m;
  }

  double min() const {
    double m = values_.front();
    for (double v : values_) m = std::min(m, v);
    return m;
  }

  bool is_constant() const { return values_.size() == 1; }
  const std::vector<double>& values() const { return values_; }

 private:
  explicit SequenceSpec(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_{0.0};
};

/// Everything a run needs besides the problem: stepsizes, coefficient
/// sequences, linesearch knobs, and stopping control. For ANPDA, tau/sigma are
/// the initial stepsizes of the adaptive schedule.
struct SolverConfig {
  Algo algo = Algo::pda;
  double tau = 0.0;
  double sigma = 0.0;
  double theta = 1.0;   // pda/npda extrapolation weight
  double psi = 1.618;   // grpda convex-combination ratio
  SequenceSpec a_seq = SequenceSpec::constant(0.0);
  SequenceSpec b_seq = SequenceSpec::constant(0.0);
  double gamma = 0.0;   // anpda schedule modulus; must not exceed the problem's
  double beta = 1.0;    // npdal dual/primal stepsize ratio
  double delta = 0.96;  // npdal acceptance factor
  double mu = 0.7;      // npdal backtrack shrink factor
  double tau0 = 0.0;    // npdal initial stepsize
  long max_iter = 1000;
  std::optional<double> target_metric;
  long record_every = 1;
  int max_backtracks = 100;
};

/// Iterates and adaptive scalars for one run. The NPDA family staggers the
/// dual update (sweep k computes x_k and y_{k+1}); here one zero-based loop
/// does the x-block then the y-block per iteration, with the caller's y0
/// playing the staggered algorithms' initial dual. After step k the state
/// holds the newest (x, y) pair.
struct SolverState {
  long k = 0;
  Vector x, x_prev, x_ag;
  Vector y, y_ag;
  Vector z;  // grpda combination point
  double tau_k = 0.0;
  double sigma_k = 0.0;
  double theta_k = 1.0;
  int backtrack_count_last = 0;
  // cached products for npdal: K x_k and K^T y_k of the current iterates
  Vector kx, kty;
};

namespace detail {

constexpr double kGoldenRatio = 1.6180339887498948482;
constexpr double kBoundGuard = 1e-12;  // settings sitting exactly on a stepsize bound pass

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

inline void check_sequence(const SequenceSpec& s, const char* name) {
  require(s.min() >= 0.0 && s.sup() < 1.0,
          std::string(name) + " values must lie in [0, 1)");
}

inline void ensure_finite(const Vector& v, const SolverConfig& cfg, long iteration) {
  if (!all_finite(v)) {
    throw SolverError(std::string(algo_name(cfg.algo)) + ": non-finite iterate", iteration);
  }
}

}  // namespace detail

/// Validates a config against a problem and its operator-norm estimate L.
/// Stepsize products sitting exactly on their bound (the stock PDA and GRPDA
/// settings do) are accepted via a 1e-12 relative guard.
inline void validate_config(const SaddleProblem& problem, const SolverConfig& cfg, double L) {
  using detail::require;
  require(cfg.max_iter >= 0, "max_iter must be nonnegative");
  require(cfg.record_every >= 1, "record_every must be positive");
  detail::check_sequence(cfg.a_seq, "a_seq");
  detail::check_sequence(cfg.b_seq, "b_seq");
  const double a_sup = cfg.a_seq.sup();
  const double b_sup = cfg.b_seq.sup();

  switch (cfg.algo) {
    case Algo::pda:
      require(cfg.tau > 0.0 && cfg.sigma > 0.0, "pda: stepsizes must be positive");
      require(cfg.theta >= 0.0 && cfg.theta <= 1.0, "pda: theta must lie in [0, 1]");
      require(std::sqrt(cfg.tau * cfg.sigma) * L <= 1.0 + detail::kBoundGuard,
              "pda: sqrt(tau*sigma)*L must not exceed 1");
      break;
    case Algo::grpda:
      require(cfg.tau > 0.0 && cfg.sigma > 0.0, "grpda: stepsizes must be positive");
      require(cfg.psi > 1.0 && cfg.psi <= detail::kGoldenRatio + detail::kBoundGuard,
              "grpda: psi must lie in (1, (1+sqrt(5))/2]");
      require(cfg.tau * cfg.sigma * L * L <= cfg.psi * (1.0 + detail::kBoundGuard),
              "grpda: tau*sigma*L^2 must not exceed psi");
      break;
    case Algo::npda:
      require(cfg.tau > 0.0 && cfg.sigma > 0.0, "npda: stepsizes must be positive");
      require(cfg.theta >= 0.0 && cfg.theta <= 1.0, "npda: theta must lie in [0, 1]");
      require(std::sqrt(cfg.tau * cfg.sigma) * L < 1.0 - a_sup,
              "npda: sqrt(tau*sigma)*L must stay below 1 - sup a_k");
      require(std::sqrt(cfg.tau * cfg.sigma) * L < 1.0 - b_sup,
              "npda: sqrt(tau*sigma)*L must stay below 1 - sup b_k");
      break;
    case Algo::anpda:
      require(cfg.tau > 0.0 && cfg.sigma > 0.0, "anpda: initial stepsizes must be positive");
      require(cfg.gamma > 0.0, "anpda: gamma must be positive");
      require(cfg.gamma <= problem.gamma_fstar + detail::kBoundGuard,
              "anpda: gamma exceeds the strong-convexity modulus of f*");
      require(std::sqrt(cfg.tau * cfg.sigma) * L < 1.0 - a_sup,
              "anpda: sqrt(tau0*sigma0)*L must stay below 1 - sup a_k");
      require(std::sqrt(cfg.tau * cfg.sigma) * L < 1.0 - b_sup,
              "anpda: sqrt(tau0*sigma0)*L must stay below 1 - sup b_k");
      break;
    case Algo::npdal: {
      require(cfg.tau0 > 0.0, "npdal: tau0 must be positive");
      require(cfg.beta > 0.0, "npdal: beta must be positive");
      require(cfg.mu > 0.0 && cfg.mu < 1.0, "npdal: mu must lie in (0, 1)");
      require(cfg.delta > 0.0 && cfg.delta < 1.0, "npdal: delta must lie in (0, 1)");
      const double th2 = detail::kGoldenRatio * detail::kGoldenRatio;
      require(cfg.delta + th2 * a_sup + a_sup < 1.0,
              "npdal: delta + theta^2*a_k + a_k must stay below 1");
      require(cfg.delta + b_sup < 1.0, "npdal: delta + b_k must stay below 1");
      require(cfg.max_backtracks >= 1, "npdal: max_backtracks must be positive");
      break;
    }
  }
}

/// Fresh state at (x0, y0). For the staggered algorithms x_{-1} = x0 and the
/// aggregate points start at the initial iterates.
inline SolverState init_state(const SaddleProblem& problem, const SolverConfig& cfg,
                              Vector x0, Vector y0) {
  if (x0.size() != problem.K.cols()) {
    throw DimensionError("init_state: x0 length does not match K.cols");
  }
  if (y0.size() != problem.K.rows()) {
    throw DimensionError("init_state: y0 length does not match K.rows");
  }
  SolverState st;
  st.x = std::move(x0);
  st.y = std::move(y0);
  st.x_prev = st.x;
  st.x_ag = st.x;
  st.y_ag = st.y;
  switch (cfg.algo) {
    case Algo::pda:
      st.tau_k = cfg.tau;
      st.sigma_k = cfg.sigma;
      st.theta_k = cfg.theta;
      break;
    case Algo::grpda:
      st.tau_k = cfg.tau;
      st.sigma_k = cfg.sigma;
      st.z = st.x;
      break;
    case Algo::npda:
      st.tau_k = cfg.tau;
      st.sigma_k = cfg.sigma;
      st.theta_k = cfg.theta;
      break;
    case Algo::anpda:
      st.tau_k = cfg.tau;
      st.sigma_k = cfg.sigma;
      st.theta_k = 1.0;
      break;
    case Algo::npdal:
      st.tau_k = cfg.tau0;
      st.theta_k = 1.0;
      st.kx = problem.K.apply(st.x);
      st.kty = problem.K.apply_transpose(st.y);
      break;
  }
  return st;
}

/// One PDA sweep:
///   x <- Prox_{tau g}(x - tau K^T y),  xbar = x + theta (x - x_prev),
///   y <- Prox_{sigma f*}(y + sigma K xbar).
inline void step_pda(const SaddleProblem& problem, const SolverConfig& cfg, SolverState& st) {
  const long t = st.k + 1;
  const Vector kty = problem.K.apply_transpose(st.y);
  Vector x_new = problem.prox_g(cfg.tau, lin_comb(1.0, st.x, -cfg.tau, kty));
  detail::ensure_finite(x_new, cfg, t);
  const Vector x_bar = lin_comb(1.0 + cfg.theta, x_new, -cfg.theta, st.x);
  const Vector kxbar = problem.K.apply(x_bar);
  Vector y_new = problem.prox_fstar(cfg.sigma, lin_comb(1.0, st.y, cfg.sigma, kxbar));
  detail::ensure_finite(y_new, cfg, t);
  st.x_prev = std::move(st.x);
  st.x = std::move(x_new);
  st.y = std::move(y_new);
  st.backtrack_count_last = 0;
  st.k = t;
}

/// One GRPDA sweep: the combination point z replaces the extrapolation step,
///   z <- ((psi-1) x + z)/psi,  x <- Prox_{tau g}(z - tau K^T y),
///   y <- Prox_{sigma f*}(y + sigma K x).
inline void step_grpda(const SaddleProblem& problem, const SolverConfig& cfg, SolverState& st) {
  const long t = st.k + 1;
  st.z = lin_comb((cfg.psi - 1.0) / cfg.psi, st.x, 1.0 / cfg.psi, st.z);
  const Vector kty = problem.K.apply_transpose(st.y);
  Vector x_new = problem.prox_g(cfg.tau, lin_comb(1.0, st.z, -cfg.tau, kty));
  detail::ensure_finite(x_new, cfg, t);
  const Vector kx = problem.K.apply(x_new);
  Vector y_new = problem.prox_fstar(cfg.sigma, lin_comb(1.0, st.y, cfg.sigma, kx));
  detail::ensure_finite(y_new, cfg, t);
  st.x_prev = std::move(st.x);
  st.x = std::move(x_new);
  st.y = std::move(y_new);
  st.backtrack_count_last = 0;
  st.k = t;
}

namespace detail {

// Shared aggregate/middle-point block of the NPDA family. Iteration t uses
// a_t for the primal block and b_{t+1} for the (staggered) dual block.
// Updates the aggregates in place and returns the middle points.
inline std::pair<Vector, Vector> aggregate_middle_points(const SolverConfig& cfg,
                                                         SolverState& st, long t) {
  const double a = cfg.a_seq.at(static_cast<std::size_t>(t));
  const double b = cfg.b_seq.at(static_cast<std::size_t>(t) + 1);
  st.x_ag = lin_comb(1.0 - a, st.x_ag, a, st.x);
  st.y_ag = lin_comb(1.0 - b, st.y_ag, b, st.y);
  Vector x_md = lin_comb(1.0 - a, st.x, a, st.x_ag);
  Vector y_md = lin_comb(1.0 - b, st.y, b, st.y_ag);
  return {std::move(x_md), std::move(y_md)};
}

}  // namespace detail

/// One NPDA sweep. The proximal centers are the middle points built from the
/// aggregates rather than the previous iterates:
///   x_ag <- (1-a) x_ag + a x,    y_ag <- (1-b) y_ag + b y,
///   x_md = (1-a) x + a x_ag,     y_md = (1-b) y + b y_ag,
///   x <- Prox_{tau g}(x_md - tau K^T y),  xbar = x + theta (x - x_prev),
///   y <- Prox_{sigma f*}(y_md + sigma K xbar).
/// With a = b = 0 every middle point collapses to the previous iterate and the
/// sweep is exactly step_pda.
inline void step_npda(const SaddleProblem& problem, const SolverConfig& cfg, SolverState& st) {
  const long t = st.k + 1;
  auto [x_md, y_md] = detail::aggregate_middle_points(cfg, st, t);
  const Vector kty = problem.K.apply_transpose(st.y);
  Vector x_new = problem.prox_g(cfg.tau, lin_comb(1.0, x_md, -cfg.tau, kty));
  detail::ensure_finite(x_new, cfg, t);
  const Vector x_bar = lin_comb(1.0 + cfg.theta, x_new, -cfg.theta, st.x);
  const Vector kxbar = problem.K.apply(x_bar);
  Vector y_new = problem.prox_fstar(cfg.sigma, lin_comb(1.0, y_md, cfg.sigma, kxbar));
  detail::ensure_finite(y_new, cfg, t);
  st.x_prev = std::move(st.x);
  st.x = std::move(x_new);
  st.y = std::move(y_new);
  st.backtrack_count_last = 0;
  st.k = t;
}

/// One ANPDA sweep: NPDA with the adaptive schedule
///   theta_k = 1/sqrt(1 + gamma sigma_{k-1}),  sigma_k = sigma_{k-1} theta_k,
///   tau_k = tau_{k-1}/theta_k,
/// which keeps sigma_k tau_k constant while sigma_k decays like 1/(gamma k).
inline void step_anpda(const SaddleProblem& problem, const SolverConfig& cfg, SolverState& st) {
  const long t = st.k + 1;
  auto [x_md, y_md] = detail::aggregate_middle_points(cfg, st, t);
  const Vector kty = problem.K.apply_transpose(st.y);
  Vector x_new = problem.prox_g(st.tau_k, lin_comb(1.0, x_md, -st.tau_k, kty));
  detail::ensure_finite(x_new, cfg, t);
  const double theta = 1.0 / std::sqrt(1.0 + cfg.gamma * st.sigma_k);
  const double sigma = st.sigma_k * theta;
  const double tau = st.tau_k / theta;
  const Vector x_bar = lin_comb(1.0 + theta, x_new, -theta, st.x);
  const Vector kxbar = problem.K.apply(x_bar);
  Vector y_new = problem.prox_fstar(sigma, lin_comb(1.0, y_md, sigma, kxbar));
  detail::ensure_finite(y_new, cfg, t);
  st.x_prev = std::move(st.x);
  st.x = std::move(x_new);
  st.y = std::move(y_new);
  st.tau_k = tau;
  st.sigma_k = sigma;
  st.theta_k = theta;
  st.backtrack_count_last = 0;
  st.k = t;
}

/// One NPDAL sweep. The x block uses the previous stepsize; the dual block
/// starts from tau_{k-1} sqrt(1 + theta_{k-1}) and backtracks tau <- mu tau
/// until
///   sqrt(beta) tau ||K^T y_trial - K^T y|| <= delta ||y_trial - y||.
/// Each trial costs one transpose product; K xbar is rebuilt from cached
/// forward products. Throws SolverError past cfg.max_backtracks shrinks.
inline void step_npdal(const SaddleProblem& problem, const SolverConfig& cfg, SolverState& st) {
  const long t = st.k + 1;
  auto [x_md, y_md] = detail::aggregate_middle_points(cfg, st, t);
  const double tau_prev = st.tau_k;
  Vector x_new = problem.prox_g(tau_prev, lin_comb(1.0, x_md, -tau_prev, st.kty));
  detail::ensure_finite(x_new, cfg, t);
  const Vector kx_new = problem.K.apply(x_new);

  double tau = tau_prev * std::sqrt(1.0 + st.theta_k);
  const double sqrt_beta = std::sqrt(cfg.beta);
  int backtracks = 0;
  for (;;) {
    const double theta = tau / tau_prev;
    const Vector kxbar = lin_comb(1.0 + theta, kx_new, -theta, st.kx);
    Vector y_trial =
        problem.prox_fstar(cfg.beta * tau, lin_comb(1.0, y_md, cfg.beta * tau, kxbar));
    detail::ensure_finite(y_trial, cfg, t);
    Vector kty_trial = problem.K.apply_transpose(y_trial);
    const double lhs = sqrt_beta * tau * norm2(sub(kty_trial, st.kty));
    const double rhs = cfg.delta * norm2(sub(y_trial, st.y));
    if (lhs <= rhs) {
      st.x_prev = std::move(st.x);
      st.x = std::move(x_new);
      st.y = std::move(y_trial);
      st.kx = kx_new;
      st.kty = std::move(kty_trial);
      st.tau_k = tau;
      st.theta_k = theta;
      st.backtrack_count_last = backtracks;
      st.k = t;
      return;
    }
    if (++backtracks > cfg.max_backtracks) {
      throw SolverError("npdal: linesearch exceeded " + std::to_string(cfg.max_backtracks) +
                            " backtracks",
                        t);
    }
    tau *= cfg.mu;
  }
}

inline void step(const SaddleProblem& problem, const SolverConfig& cfg, SolverState& st) {
  switch (cfg.algo) {
    case Algo::pda: step_pda(problem, cfg, st); return;
    case Algo::grpda: step_grpda(problem, cfg, st); return;
    case Algo::npda: step_npda(problem, cfg, st); return;
    case Algo::anpda: step_anpda(problem, cfg, st); return;
    case Algo::npdal: step_npdal(problem, cfg, st); return;
  }
  throw ConfigError("step: unknown algorithm");
}

struct TraceRecord {
  long iter = 0;
  double elapsed_sec = 0.0;
  double metric = 0.0;
};

enum class StopReason { max_iter, target_reached, error };

inline const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::max_iter: return "max_iter";
    case StopReason::target_reached: return "target_reached";
    case StopReason::error: return "error";
  }
  return "?";
}

struct RunTrace {
  std::vector<TraceRecord> records;
  Vector final_x, final_y;
  long total_backtracks = 0;
  StopReason terminated_by = StopReason::max_iter;
  std::string error_message;  // set when terminated_by == error
};

namespace detail {

inline double steady_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace detail

/// Drives a solver until max_iter, the metric target, or the optional
/// wall-clock cap. The metric is recorded at iteration 0, every record_every
/// iterations, and at the final iteration; metric evaluation happens off the
/// clock so elapsed_sec measures algorithm time only. A step failure ends the
/// run with the partial trace and terminated_by == error.
inline RunTrace run(const SaddleProblem& problem, const SolverConfig& cfg, const Vector& x0,
                    const Vector& y0, std::function<double()> clock = {},
                    std::optional<double> max_seconds = {}) {
  double L = 0.0;
  if (cfg.algo != Algo::npdal) {
    L = operator_norm(problem.K);  // the linesearch variant never needs the norm
  }
  validate_config(problem, cfg, L);
  if (!clock) clock = detail::steady_seconds;

  SolverState st = init_state(problem, cfg, x0, y0);
  RunTrace trace;
  double elapsed = 0.0;

  auto record = [&]() {
    const double m = metric_value(problem, st.x, st.y);
    trace.records.push_back({st.k, elapsed, m});
    return m;
  };

  double metric = record();
  const bool target_hit_at_start = cfg.target_metric && metric <= *cfg.target_metric;
  if (target_hit_at_start) {
    trace.terminated_by = StopReason::target_reached;
  } else {
    while (st.k < cfg.max_iter) {
      const double t0 = clock();
      try {
        step(problem, cfg, st);
      } catch (const SolverError& e) {
        trace.terminated_by = StopReason::error;
        trace.error_message = e.what();
        break;
      }
      elapsed += clock() - t0;
      trace.total_backtracks += st.backtrack_count_last;
      if (st.k % cfg.record_every == 0 || st.k == cfg.max_iter) {
        metric = record();
        if (cfg.target_metric && metric <= *cfg.target_metric) {
          trace.terminated_by = StopReason::target_reached;
          break;
        }
      }
      if (max_seconds && elapsed >= *max_seconds) break;
    }
  }
  trace.final_x = st.x;
  trace.final_y = st.y;
  return trace;
}

/// Stock parameter settings for each algorithm on the two experiment families,
/// keyed off the problem's metric kind. L is the operator-norm estimate.
///
/// Matrix game:  PDA tau=sigma=1/L; GRPDA psi=1.618, tau=sigma=sqrt(psi)/L;
///               NPDA sigma=1/L, tau=(2/3)sigma, a=b=0.01;
///               NPDAL beta=1, delta=0.96, mu=0.7, tau0=sqrt(min(m,n))/||K||_F, a=b=0.01.
/// LASSO:        PDA sigma=1/(20L), tau=20/L; GRPDA sigma=sqrt(psi)/(20L), tau=20 sqrt(psi)/L;
///               NPDA sigma=3/(10L), tau=3/L, a=b=0.01;
///               ANPDA sigma0=3/(10L), tau0=33/(10L), a=b=0.005, gamma=0.1;
///               NPDAL beta=1/10, delta=0.96, mu=0.7, tau0=sqrt(min(m,n))/||K||_F, a=0.01, b=0.
inline SolverConfig default_config(Algo algo, const SaddleProblem& problem, double L) {
  if (L <= 0.0) throw ConfigError("default_config: L must be positive");
  const bool game = problem.metric == MetricKind::bilinear_game_gap;
  SolverConfig cfg;
  cfg.algo = algo;
  switch (algo) {
    case Algo::pda:
      if (game) {
        cfg.tau = cfg.sigma = 1.0 / L;
      } else {
        cfg.sigma = 1.0 / (20.0 * L);
        cfg.tau = 20.0 / L;
      }
      cfg.theta = 1.0;
      break;
    case Algo::grpda:
      cfg.psi = 1.618;
      if (game) {
        cfg.tau = cfg.sigma = std::sqrt(cfg.psi) / L;
      } else {
        cfg.sigma = std::sqrt(cfg.psi) / (20.0 * L);
        cfg.tau = 20.0 * std::sqrt(cfg.psi) / L;
      }
      break;
    case Algo::npda:
      if (game) {
        cfg.sigma = 1.0 / L;
        cfg.tau = 2.0 / (3.0 * L);
      } else {
        cfg.sigma = 3.0 / (10.0 * L);
        cfg.tau = 3.0 / L;
      }
      cfg.theta = 1.0;
      cfg.a_seq = SequenceSpec::constant(0.01);
      cfg.b_seq = SequenceSpec::constant(0.01);
      break;
    case Algo::anpda:
      if (problem.gamma_fstar <= 0.0) {
        throw ConfigError("default_config: anpda needs a strongly convex f* (gamma_fstar > 0)");
      }
      cfg.sigma = 3.0 / (10.0 * L);
      cfg.tau = 33.0 / (10.0 * L);
      cfg.a_seq = SequenceSpec::constant(0.005);
      cfg.b_seq = SequenceSpec::constant(0.005);
      cfg.gamma = 0.1;  // the stock schedule modulus; an underestimate of the true modulus is fine
      break;
    case Algo::npdal:
      cfg.beta = game ? 1.0 : 0.1;
      cfg.delta = 0.96;
      cfg.mu = 0.7;
      cfg.tau0 = std::sqrt(static_cast<double>(std::min(problem.K.rows(), problem.K.cols()))) /
                 problem.K.frobenius_norm();
      cfg.a_seq = SequenceSpec::constant(0.01);
      cfg.b_seq = SequenceSpec::constant(game ? 0.01 : 0.0);
      break;
  }
  return cfg;
}

}  // namespace saddle
