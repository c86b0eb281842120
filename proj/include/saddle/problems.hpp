#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saddle/errors.hpp"
#include "saddle/linops.hpp"
#include "saddle/prox.hpp"
#include "saddle/rng.hpp"

namespace saddle {

enum class MetricKind {
  bilinear_game_gap,  // max_i (Kx)_i - min_j (K^T y)_j; both prox maps are simplex projections
  objective_error,    // phi(x) - reference_value (phi(x) itself when no reference is set)
};

/// min_x max_y  g(x) + <Kx, y> - f*(y), packaged with the metric used to
/// report progress. prox_g acts on n-vectors, prox_fstar on m-vectors;
/// gamma_fstar mirrors prox_fstar.gamma.
struct SaddleProblem {
  LinearMap K;
  ProxFn prox_g;
  ProxFn prox_fstar;
  double gamma_fstar = 0.0;
  MetricKind metric = MetricKind::bilinear_game_gap;
  std::optional<double> reference_value;

  // Data backing the objective_error metric (LASSO instances).
  Vector b;
  double lambda = 0.0;
  Vector true_signal;  // the planted w with b = Kw + noise; diagnostic only

  // Default start points baked in by the generators.
  Vector x0;
  Vector y0;
};

enum class ProblemFamily {
  matgame1,  // 100x100, entries uniform [-1, 1]
  matgame2,  // 100x100, entries N(0, 1)
  matgame3,  // 500x100, entries N(0, 1)
  matgame4,  // 1000x2000 CSR, 10% of cells uniform [0, 1]
  lasso1,    // m=200,  n=1000, s=10,  entries N(0, 1)
  lasso2,    // m=1000, n=2000, s=100, entries N(0, 1)
  lasso3,    // m=1000, n=5000, s=50,  AR(1)-correlated columns, p=0.5
  lasso4,    // same as lasso3 with p=0.9
};

inline bool is_matgame(ProblemFamily f) {
  return f == ProblemFamily::matgame1 || f == ProblemFamily::matgame2 ||
         f == ProblemFamily::matgame3 || f == ProblemFamily::matgame4;
}

/// Which problem to generate. Optional overrides replace the family's stock
/// dimensions (handy for desk-scale runs and tests).
struct GeneratorSpec {
  ProblemFamily family = ProblemFamily::matgame1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  std::optional<std::size_t> s;  // LASSO support size
};

namespace detail {

inline LinearMap dense_random(std::size_t m, std::size_t n, Rng& rng, bool gaussian) {
  Vector vals(m * n);
  for (double& v : vals) v = gaussian ? rng.normal() : rng.uniform(-1.0, 1.0);
  return LinearMap::dense(m, n, std::move(vals));
}

// Sparse uniform[0,1] matrix with exactly floor(density*m*n) nonzeros placed
// by sequential selection sampling over the row-major cell order, which keeps
// the pattern deterministic and the CSR assembly a single pass.
inline LinearMap sparse_uniform(std::size_t m, std::size_t n, double density, Rng& rng) {
  const std::size_t cells = m * n;
  std::size_t needed = static_cast<std::size_t>(density * static_cast<double>(cells));
  std::vector<std::size_t> row_ptr(m + 1, 0);
  std::vector<std::size_t> col_idx;
  Vector vals;
  col_idx.reserve(needed);
  vals.reserve(needed);
  std::size_t remaining = needed;
  for (std::size_t c = 0; c < cells && remaining > 0; ++c) {
    const std::size_t left = cells - c;
    if (rng.uniform() * static_cast<double>(left) < static_cast<double>(remaining)) {
      col_idx.push_back(c % n);
      vals.push_back(rng.uniform());
      ++row_ptr[c / n + 1];
      --remaining;
    }
  }
  for (std::size_t i = 0; i < m; ++i) row_ptr[i + 1] += row_ptr[i];
  return LinearMap::csr(m, n, std::move(row_ptr), std::move(col_idx), std::move(vals));
}

// Columns follow K_1 = B_1/sqrt(1-p^2), K_j = p*K_{j-1} + B_j with B_j ~ N(0,1),
// sampled column by column.
inline LinearMap correlated_columns(std::size_t m, std::size_t n, double p, Rng& rng) {
  Vector dense(m * n, 0.0);
  Vector prev(m, 0.0);
  const double scale1 = 1.0 / std::sqrt(1.0 - p * p);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const double bij = rng.normal();
      const double kij = (j == 0) ? bij * scale1 : p * prev[i] + bij;
      dense[i * n + j] = kij;
      prev[i] = kij;
    }
  }
  return LinearMap::dense(m, n, std::move(dense));
}

}  // namespace detail

/// Matrix game min_{x in simplex} max_{y in simplex} <Kx, y> for the four
/// stock instances. Both prox maps are simplex projections; uniform starts.
inline SaddleProblem gen_matrix_game(const GeneratorSpec& spec) {
  std::size_t m = 0, n = 0;
  bool gaussian = false, sparse = false;
  switch (spec.family) {
    case ProblemFamily::matgame1: m = 100; n = 100; break;
    case ProblemFamily::matgame2: m = 100; n = 100; gaussian = true; break;
    case ProblemFamily::matgame3: m = 500; n = 100; gaussian = true; break;
    case ProblemFamily::matgame4: m = 1000; n = 2000; sparse = true; break;
    default:
      throw ConfigError("gen_matrix_game: spec.family is not a matrix-game family");
  }
  if (spec.m) m = *spec.m;
  if (spec.n) n = *spec.n;
  if (m == 0 || n == 0) throw ConfigError("gen_matrix_game: dimensions must be positive");

  Rng rng(spec.seed);
  SaddleProblem prob;
  prob.K = sparse ? detail::sparse_uniform(m, n, 0.10, rng)
                  : detail::dense_random(m, n, rng, gaussian);
  prob.prox_g = {[](double, const Vector& v) { return project_simplex(v); }, 0.0};
  prob.prox_fstar = {[](double, const Vector& v) { return project_simplex(v); }, 0.0};
  prob.gamma_fstar = 0.0;
  prob.metric = MetricKind::bilinear_game_gap;
  prob.x0 = Vector(n, 1.0 / static_cast<double>(n));
  prob.y0 = Vector(m, 1.0 / static_cast<double>(m));
  return prob;
}

/// LASSO min_x 0.5*||Kx - b||^2 + lambda*||x||_1 in saddle form, for the four
/// stock instances: b = K w + v with w supported on s uniform [-10,10] spikes
/// and v ~ N(0, 0.1) (standard deviation 0.1). lambda = 0.1. Starts are
/// x0 = 0, y0 = K x0 - b.
inline SaddleProblem gen_lasso(const GeneratorSpec& spec) {
  std::size_t m = 0, n = 0, s = 0;
  double p = 0.0;
  switch (spec.family) {
    case ProblemFamily::lasso1: m = 200; n = 1000; s = 10; break;
    case ProblemFamily::lasso2: m = 1000; n = 2000; s = 100; break;
    case ProblemFamily::lasso3: m = 1000; n = 5000; s = 50; p = 0.5; break;
    case ProblemFamily::lasso4: m = 1000; n = 5000; s = 50; p = 0.9; break;
    default:
      throw ConfigError("gen_lasso: spec.family is not a LASSO family");
  }
  if (spec.m) m = *spec.m;
  if (spec.n) n = *spec.n;
  if (spec.s) s = *spec.s;
  if (m == 0 || n == 0) throw ConfigError("gen_lasso: dimensions must be positive");
  if (s > n) throw ConfigError("gen_lasso: support size exceeds dimension");

  Rng rng(spec.seed);
  LinearMap K = (p > 0.0) ? detail::correlated_columns(m, n, p, rng)
                          : detail::dense_random(m, n, rng, true);

  // Support drawn without replacement (partial Fisher-Yates), then filled in
  // ascending index order.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < s; ++i) {
    std::swap(idx[i], idx[i + rng.below(n - i)]);
  }
  std::sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(s));
  Vector w(n, 0.0);
  for (std::size_t i = 0; i < s; ++i) w[idx[i]] = rng.uniform(-10.0, 10.0);

  Vector b = K.apply(w);
  for (double& e : b) e += rng.normal(0.0, 0.1);

  const double lambda = 0.1;
  Vector b_copy = b;
  SaddleProblem prob;
  prob.K = std::move(K);
  prob.prox_g = {[lambda](double step, const Vector& v) { return prox_l1(step, lambda, v); },
                 0.0};
  prob.prox_fstar = {[b_copy](double step, const Vector& v) {
                       return prox_lasso_dual(step, b_copy, v);
                     },
                     1.0};
  prob.gamma_fstar = 1.0;
  prob.metric = MetricKind::objective_error;
  prob.b = std::move(b);
  prob.lambda = lambda;
  prob.true_signal = std::move(w);
  prob.x0 = Vector(n, 0.0);
  Vector y0 = prob.K.apply(prob.x0);
  for (std::size_t i = 0; i < m; ++i) y0[i] -= prob.b[i];
  prob.y0 = std::move(y0);
  return prob;
}

inline SaddleProblem generate(const GeneratorSpec& spec) {
  return is_matgame(spec.family) ? gen_matrix_game(spec) : gen_lasso(spec);
}

/// Matrix-game gap max_i (Kx)_i - min_j (K^T y)_j. Inputs must be
/// simplex-feasible: componentwise >= -1e-12 and sums within 1e-8 of one.
inline double game_gap(const LinearMap& K, const Vector& x, const Vector& y) {
  auto check_feasible = [](const Vector& v, const char* name) {
    double sum = 0.0;
    for (double e : v) {
      if (e < -1e-12) throw ConfigError(std::string("game_gap: ") + name + " has a negative entry");
      sum += e;
    }
    if (std::abs(sum - 1.0) > 1e-8) {
      throw ConfigError(std::string("game_gap: ") + name + " does not sum to 1");
    }
  };
  check_feasible(x, "x");
  check_feasible(y, "y");
  const Vector kx = K.apply(x);
  const Vector kty = K.apply_transpose(y);
  const double hi = *std::max_element(kx.begin(), kx.end());
  const double lo = *std::min_element(kty.begin(), kty.end());
  return hi - lo;
}

/// phi(x) = 0.5*||Kx - b||^2 + lambda*||x||_1
inline double lasso_objective(const LinearMap& K, const Vector& b, double lambda,
                              const Vector& x) {
  Vector r = K.apply(x);
  check_same_size(r, b, "lasso_objective");
  double quad = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double d = r[i] - b[i];
    quad += d * d;
  }
  double l1 = 0.0;
  for (double e : x) l1 += std::abs(e);
  return 0.5 * quad + lambda * l1;
}

/// Primal-dual gap anchored at a (near-)saddle point (xhat, yhat):
///   P(x) = g(x) - g(xhat) + <K^T yhat, x - xhat>
///   D(y) = f*(y) - f*(yhat) - <K xhat, y - yhat>
/// Nonnegative for every (x, y) when the anchor is an exact saddle point.
inline double primal_dual_gap(const SaddleProblem& problem, const Vector& xhat,
                              const Vector& yhat, const Vector& x, const Vector& y,
                              const std::function<double(const Vector&)>& g_value,
                              const std::function<double(const Vector&)>& fstar_value) {
  const Vector kty_hat = problem.K.apply_transpose(yhat);
  const Vector kx_hat = problem.K.apply(xhat);
  const double primal = g_value(x) - g_value(xhat) + dot(kty_hat, sub(x, xhat));
  const double dual = fstar_value(y) - fstar_value(yhat) - dot(kx_hat, sub(y, yhat));
  return primal + dual;
}

/// The progress metric a run reports for this problem at iterate (x, y).
inline double metric_value(const SaddleProblem& problem, const Vector& x, const Vector& y) {
  switch (problem.metric) {
    case MetricKind::bilinear_game_gap:
      return game_gap(problem.K, x, y);
    case MetricKind::objective_error:
      return lasso_objective(problem.K, problem.b, problem.lambda, x) -
             problem.reference_value.value_or(0.0);
  }
  throw ConfigError("metric_value: unknown metric kind");
}

}  // namespace saddle
