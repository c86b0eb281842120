#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "saddle/errors.hpp"
#include "saddle/linops.hpp"

namespace saddle {

/// A proximal map step -> point -> point together with the strong-convexity
/// modulus gamma of the underlying function (0 for merely convex functions).
/// Solvers read gamma to decide whether an accelerated schedule applies.
struct ProxFn {
  std::function<Vector(double step, const Vector& v)> op;
  double gamma = 0.0;

  Vector operator()(double step, const Vector& v) const { return op(step, v); }
};

/// Soft-thresholding: prox of step * lambda * ||.||_1.
inline Vector prox_l1(double step, double lambda, const Vector& v) {
  if (step <= 0.0) throw ConfigError("prox_l1: step must be positive");
  if (lambda < 0.0) throw ConfigError("prox_l1: lambda must be nonnegative");
  const double t = step * lambda;
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]) - t;
    out[i] = m > 0.0 ? (v[i] > 0.0 ? m : -m) : 0.0;
  }
  return out;
}

/// Prox of step * f* for f*(y) = 0.5*||y + b||^2 - 0.5*||b||^2 (the dual
/// function of the least-squares data term): (v - step*b) / (1 + step).
/// f* is 1-strongly convex.
inline Vector prox_lasso_dual(double step, const Vector& b, const Vector& v) {
  if (step <= 0.0) throw ConfigError("prox_lasso_dual: step must be positive");
  check_same_size(b, v, "prox_lasso_dual");
  Vector out(v.size());
  const double inv = 1.0 / (1.0 + step);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - step * b[i]) * inv;
  return out;
}

/// Euclidean projection onto the unit simplex {z : sum z = 1, z >= 0}.
///
/// Sort-based threshold rule: with u the entries of v sorted descending, take
/// the largest k such that u_k - (sum_{i<=k} u_i - 1)/k > 0 and subtract that
/// threshold, clamping at zero. Entries below 1e-15 after clamping (including
/// negative zeros) are snapped to exact 0 so downstream feasibility checks see
/// clean iterates.
inline Vector project_simplex(const Vector& v) {
  if (v.empty()) throw DimensionError("project_simplex: empty vector");
  Vector u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0;
  double theta = 0.0;  // k = 1 always qualifies: u_1 - (u_1 - 1) = 1 > 0
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumsum += u[k];
    const double candidate = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) theta = candidate;
  }
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double z = v[i] - theta;
    out[i] = (z >= 1e-15) ? z : 0.0;
  }
  return out;
}

/// The affine prox special cases where the map has a closed linear/affine form.
enum class AffineProxCase {
  linear,                // f*(y) = <b, y>            -> u - step*b
  quadratic_shift,       // f*(y) = 0.5*||y - b||^2   -> (u + step*b)/(1 + step)
  hyperplane_indicator,  // f*    = ind{<a,u> = b}    -> u + (b - <a,u>)/||a||^2 * a
};

struct AffineProxParams {
  Vector b;            // cases linear / quadratic_shift
  Vector a;            // case hyperplane_indicator: hyperplane normal (must be nonzero)
  double offset = 0.0; // case hyperplane_indicator: hyperplane level
};

inline Vector prox_affine_cases(AffineProxCase which, const AffineProxParams& params,
                                double step, const Vector& v) {
  if (step <= 0.0) throw ConfigError("prox_affine_cases: step must be positive");
  switch (which) {
    case AffineProxCase::linear: {
      check_same_size(params.b, v, "prox_affine_cases(linear)");
      return lin_comb(1.0, v, -step, params.b);
    }
    case AffineProxCase::quadratic_shift: {
      check_same_size(params.b, v, "prox_affine_cases(quadratic_shift)");
      Vector out = lin_comb(1.0, v, step, params.b);
      const double inv = 1.0 / (1.0 + step);
      for (double& e : out) e *= inv;
      return out;
    }
    case AffineProxCase::hyperplane_indicator: {
      check_same_size(params.a, v, "prox_affine_cases(hyperplane)");
      const double a2 = dot(params.a, params.a);
      if (a2 == 0.0) {
        throw ConfigError("prox_affine_cases: hyperplane normal must be nonzero");
      }
      const double c = (params.offset - dot(params.a, v)) / a2;
      return lin_comb(1.0, v, c, params.a);
    }
  }
  throw ConfigError("prox_affine_cases: unknown case");
}

/// Certifies a claimed prox value p ~ Prox_{step*h}(v) against the variational
/// characterization <p - v, y - p> >= step*(h(p) - h(y)): returns the largest
/// violation of that inequality over the supplied probe points (0 means every
/// probe is consistent with p being the prox).
inline double prox_residual(const std::function<double(const Vector&)>& h_value,
                            double step, const Vector& v, const Vector& p,
                            std::span<const Vector> probes) {
  check_same_size(v, p, "prox_residual");
  const double hp = h_value(p);
  Vector diff = sub(p, v);
  double worst = 0.0;
  for (const Vector& y : probes) {
    check_same_size(y, p, "prox_residual probe");
    const double lhs = dot(diff, sub(y, p));
    const double rhs = step * (hp - h_value(y));
    worst = std::max(worst, rhs - lhs);
  }
  return worst;
}

}  // namespace saddle
