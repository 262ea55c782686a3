#include "kk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kk/errors.hpp"

namespace kk::linalg {

namespace {

double frobenius_norm(const SymMatrix& a) {
  double s = 0.0;
  for (double v : a.full().data()) s += v * v;
  return std::sqrt(s);
}

double off_diagonal_norm(const Matrix& m) {
  double s = 0.0;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += m(i, j) * m(i, j);
  return std::sqrt(2.0 * s);
}

}  // namespace

double pd_tolerance(const SymMatrix& a) {
  double max_diag = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    max_diag = std::max(max_diag, std::fabs(a(i, i)));
  return 1e-12 * std::max(max_diag, 1e-300);
}

Spectrum sym_eigen(const SymMatrix& a, bool with_vectors) {
  const std::size_t n = a.size();
  if (n == 0) throw input_error("sym_eigen: empty matrix");
  for (double v : a.full().data())
    if (!std::isfinite(v)) throw input_error("sym_eigen: non-finite entry");

  Matrix w = a.full();  // working copy, diagonalized in place
  Matrix q = Matrix::identity(n);
  const double threshold = 1e-13 * frobenius_norm(a);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(w) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = w(p, r);
        if (std::fabs(apr) <= threshold / (double)(n * n)) continue;
        const double app = w(p, p);
        const double arr = w(r, r);
        const double theta = (arr - app) / (2.0 * apr);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double wkp = w(k, p);
          const double wkr = w(k, r);
          w(k, p) = c * wkp - s * wkr;
          w(k, r) = s * wkp + c * wkr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double wpk = w(p, k);
          const double wrk = w(r, k);
          w(p, k) = c * wpk - s * wrk;
          w(r, k) = s * wpk + c * wrk;
        }
        // Recompute the zeroed pair from the analytic update; the two-sided
        // rotation above leaves O(eps) residue there.
        w(p, r) = 0.0;
        w(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q(k, p);
          const double qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i) < w(j, j); });

  Spectrum spec;
  spec.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) spec.values[k] = w(order[k], order[k]);

  if (with_vectors) {
    Matrix vecs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t src = order[k];
      // Fix the sign so the result does not depend on rotation history.
      std::size_t imax = 0;
      double vmax = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double av = std::fabs(q(i, src));
        if (av > vmax) {
          vmax = av;
          imax = i;
        }
      }
      const double sgn = q(imax, src) >= 0.0 ? 1.0 : -1.0;
      for (std::size_t i = 0; i < n; ++i) vecs(i, k) = sgn * q(i, src);
    }
    spec.vectors = std::move(vecs);
  }
  return spec;
}

CholeskyResult cholesky_pd(const SymMatrix& a) {
  const std::size_t n = a.size();
  for (double v : a.full().data())
    if (!std::isfinite(v)) throw input_error("cholesky_pd: non-finite entry");

  const double tol = pd_tolerance(a);
  CholeskyResult res;
  res.factor = Matrix(n, n);
  Matrix& l = res.factor;

  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= tol) {
      res.status = (d >= -tol) ? PdStatus::boundary_singular : PdStatus::indefinite;
      res.failure_pivot = j;
      res.factor = Matrix();
      return res;
    }
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  res.status = PdStatus::positive_definite;
  return res;
}

std::vector<double> solve_spd(const SymMatrix& a, std::span<const double> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw input_error("solve_spd: length mismatch");
  const CholeskyResult ch = cholesky_pd(a);
  if (!ch.is_pd()) throw certificate_error("solve_spd: matrix is not positive definite");
  const Matrix& l = ch.factor;

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i);
  }
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
    x[ii] = s / l(ii, ii);
  }
  return x;
}

double inverse_quadratic_form(const SymMatrix& a, std::span<const double> x,
                              std::span<const double> y) {
  const std::vector<double> ainv_y = solve_spd(a, y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ainv_y[i];
  return s;
}

}  // namespace kk::linalg
