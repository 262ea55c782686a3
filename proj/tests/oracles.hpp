#pragma once

// Test-only oracles, deliberately independent of the production code paths:
//  - eigenvalues by Householder tridiagonalization + Sturm-sequence bisection
//    (checks the cyclic-Jacobi solver),
//  - principal angles by one-sided Jacobi SVD of the cross-Gram matrix
//    (checks the Sigma-spectrum angle path),
//  - a grid + pattern-search minimizer over the unit sphere
//    (checks witness optimality),
//  - seeded random generators for matrices and subspaces.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "kk/matrix.hpp"
#include "kk/subspaces.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Sturm-sequence eigenvalues
// ---------------------------------------------------------------------------

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size n-1
};

inline Tridiagonal householder_tridiagonalize(const kk::SymMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += m[i][k] * m[i][k];
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (m[k + 1][k] > 0) alpha = -alpha;

    std::vector<double> v(n, 0.0);
    v[k + 1] = m[k + 1][k] - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = m[i][k];
    double vnorm2 = 0.0;
    for (double x : v) vnorm2 += x * x;
    if (vnorm2 == 0.0) continue;

    // m <- H m H with H = I - 2 v v^T / (v^T v)
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * v[j];
      w[i] = 2.0 * s / vnorm2;
    }
    double kcoef = 0.0;
    for (std::size_t i = 0; i < n; ++i) kcoef += v[i] * w[i];
    kcoef /= vnorm2;
    for (std::size_t i = 0; i < n; ++i) {
      const double ui = w[i] - kcoef * v[i];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= ui * v[j] + v[i] * (w[j] - kcoef * v[j]);
    }
  }

  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = m[i][i];
  for (std::size_t i = 0; i + 1 < n; ++i) t.off[i] = m[i + 1][i];
  return t;
}

/// Number of eigenvalues of the tridiagonal matrix strictly below x.
inline std::size_t sturm_count(const Tridiagonal& t, double x) {
  std::size_t count = 0;
  double d = t.diag[0] - x;
  if (d == 0.0) d = 1e-300;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < t.diag.size(); ++i) {
    d = (t.diag[i] - x) - t.off[i - 1] * t.off[i - 1] / d;
    if (d == 0.0) d = 1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

/// All eigenvalues, ascending, by bisection on the Sturm counts.
inline std::vector<double> sturm_eigenvalues(const kk::SymMatrix& a, double tol = 1e-12) {
  const Tridiagonal t = householder_tridiagonalize(a);
  const std::size_t n = t.diag.size();
  double lo = t.diag[0], hi = t.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::fabs(t.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::fabs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double scale = std::max({std::fabs(lo), std::fabs(hi), 1.0});

  std::vector<double> eig(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a0 = lo, b0 = hi;
    while (b0 - a0 > tol * scale) {
      const double mid = 0.5 * (a0 + b0);
      if (sturm_count(t, mid) > k)
        b0 = mid;
      else
        a0 = mid;
    }
    eig[k] = 0.5 * (a0 + b0);
  }
  return eig;
}

// ---------------------------------------------------------------------------
// Principal angles via one-sided Jacobi SVD
// ---------------------------------------------------------------------------

/// Singular values (descending) by one-sided Jacobi: rotate column pairs of a
/// copy of the matrix until all columns are mutually orthogonal.
inline std::vector<double> singular_values(const kk::Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<double>> u(cols, std::vector<double>(rows));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) u[j][i] = a(i, j);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < cols; ++p)
      for (std::size_t q = p + 1; q < cols; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          app += u[p][i] * u[p][i];
          aqq += u[q][i] * u[q][i];
          apq += u[p][i] * u[q][i];
        }
        const double denom = std::sqrt(app * aqq);
        if (denom < 1e-300 || std::fabs(apq) < 1e-15 * denom) continue;
        off = std::max(off, std::fabs(apq) / denom);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < rows; ++i) {
          const double up = u[p][i], uq = u[q][i];
          u[p][i] = c * up - s * uq;
          u[q][i] = s * up + c * uq;
        }
      }
    if (off < 1e-14) break;
  }

  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += u[j][i] * u[j][i];
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

/// cos of the Friedrichs angle between two subspaces: the largest principal
/// cosine strictly below the intersection cluster at 1.
inline double friedrichs_cos_by_svd(const kk::subspaces::Subspace& v1,
                                     const kk::subspaces::Subspace& v2) {
  kk::Matrix cross(v1.rank(), v2.rank());
  for (std::size_t i = 0; i < v1.rank(); ++i)
    for (std::size_t j = 0; j < v2.rank(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < v1.ambient_dim; ++k)
        s += v1.basis(i, k) * v2.basis(j, k);
      cross(i, j) = s;
    }
  for (double sv : singular_values(cross))
    if (sv < 1.0 - 1e-8) return sv;
  return 0.0;  // all principal cosines are 1: one subspace inside the other
}

// ---------------------------------------------------------------------------
// Sphere minimization (grid + pattern search)
// ---------------------------------------------------------------------------

/// Minimizes f over the unit sphere in R^dim. Coarse random grid followed by
/// shrinking pattern search around the incumbent.
template <typename F>
double sphere_minimize(F&& f, std::size_t dim, std::uint64_t seed,
                       std::size_t grid_points = 20000) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto normalize = [](std::vector<double>& v) {
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    for (double& x : v) x /= n;
  };

  std::vector<double> best(dim), cand(dim);
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid_points; ++g) {
    for (double& x : cand) x = gauss(rng);
    normalize(cand);
    const double val = f(cand);
    if (val < best_val) {
      best_val = val;
      best = cand;
    }
  }

  double step = 0.3;
  while (step > 1e-7) {
    bool improved = false;
    for (std::size_t d = 0; d < dim; ++d)
      for (double sgn : {1.0, -1.0}) {
        cand = best;
        cand[d] += sgn * step;
        normalize(cand);
        const double val = f(cand);
        if (val < best_val - 1e-15) {
          best_val = val;
          best = cand;
          improved = true;
        }
      }
    if (!improved) step *= 0.5;
  }
  return best_val;
}

// ---------------------------------------------------------------------------
// Seeded random inputs
// ---------------------------------------------------------------------------

inline kk::Matrix random_gaussian(std::size_t rows, std::size_t cols,
                                  std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  kk::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gauss(rng);
  return m;
}

inline kk::subspaces::Subspace random_subspace(std::size_t dim, std::size_t rank,
                                               std::mt19937_64& rng) {
  return kk::subspaces::orthonormalize(random_gaussian(rank, dim, rng), dim);
}

inline kk::Matrix random_orthogonal(std::size_t dim, std::mt19937_64& rng) {
  const kk::subspaces::Subspace s = random_subspace(dim, dim, rng);
  return s.basis;  // rows orthonormal and square
}

inline kk::SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  const kk::Matrix g = random_gaussian(n, n, rng);
  kk::SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.set(i, j, 0.5 * (g(i, j) + g(j, i)));
  return s;
}

inline kk::SymMatrix random_spd(std::size_t n, std::mt19937_64& rng, double shift = 0.1) {
  const kk::Matrix g = random_gaussian(n, n, rng);
  kk::SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double v = 0.0;
      for (std::size_t k = 0; k < n; ++k) v += g(k, i) * g(k, j);
      s.set(i, j, v / static_cast<double>(n) + (i == j ? shift : 0.0));
    }
  return s;
}

inline std::vector<double> random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  double n2 = 0.0;
  for (double& x : v) {
    x = gauss(rng);
    n2 += x * x;
  }
  const double n = std::sqrt(n2);
  for (double& x : v) x /= n;
  return v;
}

}  // namespace oracles
