#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "saddle/errors.hpp"

namespace saddle {

/// Dense column vector of doubles. Length is fixed by whoever constructs it;
/// every arithmetic helper below checks lengths and throws DimensionError on
/// mismatch.
using Vector = std::vector<double>;

inline void check_same_size(const Vector& a, const Vector& b, const char* where) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(where) + ": vector lengths " +
                         std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                         " differ");
  }
}

inline double dot(const Vector& a, const Vector& b) {
  check_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vector& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  check_same_size(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// alpha*x + beta*y, elementwise.
inline Vector lin_comb(double alpha, const Vector& x, double beta, const Vector& y) {
  check_same_size(x, y, "lin_comb");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + beta * y[i];
  return out;
}

inline Vector sub(const Vector& x, const Vector& y) { return lin_comb(1.0, x, -1.0, y); }

inline Vector scaled(const Vector& x, double alpha) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
  return out;
}

inline bool all_finite(const Vector& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

/// Linear operator K : R^n -> R^m stored either as a dense row-major array or
/// in CSR form. Immutable after construction; apply/apply_transpose are pure.
class LinearMap {
 public:
  LinearMap() = default;  // empty 0x0 map; assign a real one before use

  static LinearMap dense(std::size_t rows, std::size_t cols, Vector values) {
    if (values.size() != rows * cols) {
      throw DimensionError("LinearMap::dense: expected " + std::to_string(rows * cols) +
                           " values, got " + std::to_string(values.size()));
    }
    LinearMap m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.dense_ = std::move(values);
    m.is_dense_ = true;
    return m;
  }

  /// CSR constructor. row_ptr must have rows+1 monotone entries with
  /// row_ptr[0] == 0 and row_ptr[rows] == nnz.
  static LinearMap csr(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr,
                       std::vector<std::size_t> col_idx, Vector values) {
    if (row_ptr.size() != rows + 1) {
      throw DimensionError("LinearMap::csr: row_ptr must have rows+1 entries");
    }
    if (row_ptr.front() != 0 || row_ptr.back() != values.size() ||
        col_idx.size() != values.size()) {
      throw DimensionError("LinearMap::csr: row_ptr/col_idx/values sizes inconsistent");
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_ptr[i] > row_ptr[i + 1]) {
        throw DimensionError("LinearMap::csr: row_ptr not monotone");
      }
    }
    for (std::size_t c : col_idx) {
      if (c >= cols) throw DimensionError("LinearMap::csr: column index out of range");
    }
    LinearMap m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_ = std::move(row_ptr);
    m.col_idx_ = std::move(col_idx);
    m.vals_ = std::move(values);
    m.is_dense_ = false;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_dense() const noexcept { return is_dense_; }
  std::size_t nnz() const noexcept { return is_dense_ ? dense_.size() : vals_.size(); }

  /// K x
  Vector apply(const Vector& x) const {
    if (x.size() != cols_) {
      throw DimensionError("LinearMap::apply: vector length " + std::to_string(x.size()) +
                           " != cols " + std::to_string(cols_));
    }
    Vector out(rows_, 0.0);
    if (is_dense_) {
      for (std::size_t i = 0; i < rows_; ++i) {
        const double* row = dense_.data() + i * cols_;
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
        out[i] = s;
      }
    } else {
      for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
          s += vals_[p] * x[col_idx_[p]];
        }
        out[i] = s;
      }
    }
    return out;
  }

  /// K^T y
  Vector apply_transpose(const Vector& y) const {
    if (y.size() != rows_) {
      throw DimensionError("LinearMap::apply_transpose: vector length " +
                           std::to_string(y.size()) + " != rows " + std::to_string(rows_));
    }
    Vector out(cols_, 0.0);
    if (is_dense_) {
      for (std::size_t i = 0; i < rows_; ++i) {
        const double* row = dense_.data() + i * cols_;
        const double yi = y[i];
        for (std::size_t j = 0; j < cols_; ++j) out[j] += row[j] * yi;
      }
    } else {
      for (std::size_t i = 0; i < rows_; ++i) {
        const double yi = y[i];
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
          out[col_idx_[p]] += vals_[p] * yi;
        }
      }
    }
    return out;
  }

  double frobenius_norm() const {
    double s = 0.0;
    if (is_dense_) {
      for (double v : dense_) s += v * v;
    } else {
      for (double v : vals_) s += v * v;
    }
    return std::sqrt(s);
  }

  /// Dense row-major copy of the entries; mostly useful for small maps and tests.
  Vector to_dense() const {
    if (is_dense_) return dense_;
    Vector out(rows_ * cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
        out[i * cols_ + col_idx_[p]] = vals_[p];
      }
    }
    return out;
  }

  double entry(std::size_t i, std::size_t j) const {
    if (is_dense_) return dense_[i * cols_ + j];
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      if (col_idx_[p] == j) return vals_[p];
    }
    return 0.0;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool is_dense_ = true;
  Vector dense_;                     // row-major, rows_ * cols_
  std::vector<std::size_t> row_ptr_; // CSR
  std::vector<std::size_t> col_idx_;
  Vector vals_;
};

/// Spectral norm estimate via power iteration on K^T K.
///
/// The starting vector is the normalized all-ones vector so that repeated
/// calls give the same answer. If that start happens to lie in the null space
/// of K, the iteration restarts from a fixed pseudorandom vector (still
/// deterministic). Stops when successive estimates agree to a factor of the
/// requested tolerance; the zero map returns 0.
///
/// Throws ConvergenceError (carrying the last estimate) if max_iter power
/// steps are not enough.
inline double operator_norm(const LinearMap& map, double tol = 1e-6, int max_iter = 1000) {
  if (tol <= 0.0) throw ConfigError("operator_norm: tol must be positive");
  const std::size_t n = map.cols();
  if (n == 0 || map.rows() == 0) return 0.0;

  Vector v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double estimate = 0.0;
  bool restarted = false;

  for (int it = 0; it < max_iter; ++it) {
    Vector kv = map.apply(v);
    Vector w = map.apply_transpose(kv);  // K^T K v
    const double wn = norm2(w);
    if (wn == 0.0) {
      if (restarted) return 0.0;  // zero map (or start stuck twice: treat as zero)
      // Deterministic restart off the null space: a fixed LCG fills the vector.
      restarted = true;
      std::uint64_t s = 0x9e3779b97f4a7c15ULL;
      for (std::size_t i = 0; i < n; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        v[i] = static_cast<double>(s >> 11) * 0x1.0p-53 - 0.5;
      }
      const double vn = norm2(v);
      for (double& e : v) e /= vn;
      continue;
    }
    const double sigma = norm2(kv);  // ||K v|| with ||v|| = 1
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
    // Stop once two successive Rayleigh estimates agree well within tol.
    if (it > 0 && std::abs(sigma - estimate) <= 0.25 * tol * std::max(sigma, 1e-300)) {
      return sigma;
    }
    estimate = sigma;
  }
  throw ConvergenceError("operator_norm: power iteration did not converge in " +
                             std::to_string(max_iter) + " iterations",
                         estimate);
}

}  // namespace saddle
