#include "kk/certificates.hpp"

#include <algorithm>
#include <cmath>

#include "kk/errors.hpp"

namespace kk::certificates {

namespace {

void check_eps_value(double e, bool allow_boundary) {
  if (!(e >= 0.0) || e > 1.0 || (!allow_boundary && e >= 1.0))
    throw input_error("eps entry out of range");
}

void require_strict(const AngleMatrix& eps) {
  const std::size_t n = eps.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (eps.eps(i, j) >= 1.0) throw input_error("eps entry out of range [0,1)");
}

}  // namespace

AngleMatrix::AngleMatrix(std::size_t n) : a_(SymMatrix::identity(n)) {
  if (n == 0) throw input_error("AngleMatrix: empty");
}

void AngleMatrix::set_eps(std::size_t i, std::size_t j, double e) {
  if (i == j) throw input_error("AngleMatrix: diagonal is fixed");
  check_eps_value(e, /*allow_boundary=*/true);
  a_.set(i, j, -e);
}

AngleMatrix AngleMatrix::from_eps(const Matrix& eps) {
  if (eps.rows() != eps.cols() || eps.rows() == 0)
    throw input_error("AngleMatrix: eps matrix must be square and nonempty");
  const std::size_t n = eps.rows();
  AngleMatrix am(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (eps(i, i) != 0.0)
      throw input_error("AngleMatrix: diagonal eps entries must be 0");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (eps(i, j) != eps(j, i))
        throw input_error("AngleMatrix: eps matrix must be symmetric");
      am.set_eps(i, j, eps(i, j));
    }
  }
  return am;
}

AngleMatrix AngleMatrix::uniform(std::size_t n, double eps) {
  AngleMatrix am(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) am.set_eps(i, j, eps);
  return am;
}

Certificate build_certificate(const AngleMatrix& eps) {
  const std::size_t n = eps.size();
  if (n < 2) throw input_error("build_certificate: need n >= 2");
  require_strict(eps);

  Certificate cert;
  cert.status = linalg::cholesky_pd(eps.matrix()).status;
  cert.lambda_min = linalg::sym_eigen(eps.matrix(), /*with_vectors=*/false).min();
  if (cert.status == linalg::PdStatus::positive_definite) {
    const double c = 1.0 - cert.lambda_min / static_cast<double>(n - 1);
    cert.angle_lower_bound = std::acos(std::clamp(c, -1.0, 1.0));
    const std::vector<double> ones(n, 1.0);
    const std::vector<double> x = linalg::solve_spd(eps.matrix(), ones);
    double m = 0.0;
    for (double xi : x) m += xi;
    cert.m_value = m;
  }
  return cert;
}

double distance_bound(const AngleMatrix& eps, std::span<const double> d) {
  if (d.size() != eps.size()) throw input_error("distance_bound: length mismatch");
  for (double di : d)
    if (di < 0.0) throw input_error("distance_bound: distances must be nonnegative");
  return linalg::inverse_quadratic_form(eps.matrix(), d, d);
}

bool residual_matrix_check(const AngleMatrix& eps, double d0, std::span<const double> d) {
  const std::size_t n = eps.size();
  if (d.size() != n) throw input_error("residual_matrix_check: length mismatch");
  if (!linalg::cholesky_pd(eps.matrix()).is_pd())
    throw certificate_error("residual_matrix_check: certificate matrix is not pd");

  SymMatrix b(n + 1);
  b.set(0, 0, d0 * d0);
  for (std::size_t i = 0; i < n; ++i) {
    b.set(0, i + 1, d[i]);
    for (std::size_t j = i; j < n; ++j) b.set(i + 1, j + 1, eps.matrix()(i, j));
  }
  return !linalg::cholesky_pd(b).is_pd();
}

ThreeSubspaceBounds three_subspace_bounds(double e12, double e13, double e23) {
  for (double e : {e12, e13, e23}) check_eps_value(e, /*allow_boundary=*/false);
  ThreeSubspaceBounds b;
  b.feasible =
      e12 * e12 + e23 * e23 + e13 * e13 + 2.0 * e12 * e23 * e13 < 1.0;
  b.plane_bound_sq =
      (e13 * e13 + e23 * e23 + 2.0 * e12 * e23 * e13) / (1.0 - e12 * e12);
  b.pair_bound =
      (e12 + e13 * e23) / (std::sqrt(1.0 - e13 * e13) * std::sqrt(1.0 - e23 * e23));
  return b;
}

double corollary3_bound(double e12, double e13, double e23) {
  if (!three_subspace_bounds(e12, e13, e23).feasible)
    throw certificate_error("corollary3_bound: triple is not feasible");
  AngleMatrix am(3);
  am.set_eps(0, 1, e12);
  am.set_eps(0, 2, e13);
  am.set_eps(1, 2, e23);
  return linalg::sym_eigen(am.matrix(), /*with_vectors=*/false).min() / 2.0;
}

Matrix gram_realize(const AngleMatrix& eps) {
  const Spectrum spec = linalg::sym_eigen(eps.matrix());
  const std::size_t n = eps.size();
  const double scale = std::max(std::fabs(spec.min()), std::fabs(spec.max()));
  const double tol = 1e-10 * std::max(scale, 1.0);
  if (spec.min() < -tol)
    throw certificate_error("gram_realize: matrix is indefinite, not realizable");

  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k)
    if (spec.values[k] > tol) kept.push_back(k);

  // w_i = sqrt(Lambda) Q^T e_i restricted to the nonzero eigenvalues.
  Matrix w(n, kept.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < kept.size(); ++c)
      w(i, c) = std::sqrt(spec.values[kept[c]]) * (*spec.vectors)(i, kept[c]);
  return w;
}

subspaces::Arrangement hyperplane_arrangement(const AngleMatrix& eps) {
  Matrix w = gram_realize(eps);
  // A rank-1 realization would make the "hyperplanes" zero subspaces; embed in
  // the plane instead so the degenerate member comes out as equal lines.
  const std::size_t dim = std::max<std::size_t>(w.cols(), 2);
  if (w.cols() < dim) {
    Matrix lifted(w.rows(), dim);
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) lifted(i, j) = w(i, j);
    w = std::move(lifted);
  }

  subspaces::Arrangement arr;
  arr.ambient_dim = dim;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    Matrix line(1, dim);
    std::copy(w.row(i).begin(), w.row(i).end(), line.row(0).begin());
    arr.subspaces.push_back(
        subspaces::orthocomplement(subspaces::orthonormalize(line, dim)));
  }
  return arr;
}

FamilyMember degenerate_family(const AngleMatrix& eps, double t) {
  if (!(t > 0.0) || t > 1.0) throw input_error("degenerate_family: t must be in (0,1]");
  const std::size_t n = eps.size();
  const double lambda_min = linalg::sym_eigen(eps.matrix(), false).min();
  if (lambda_min > linalg::pd_tolerance(eps.matrix()))
    throw certificate_error(
        "degenerate_family: matrix is positive definite with margin, nothing to "
        "degenerate");

  // A = I - E with lambda_max(E) = 1 - lambda_min(A) >= 1; the scale s = t /
  // lambda_max(E) <= t gives lambda_min(A_s) = 1 - t.
  const double e_top = 1.0 - lambda_min;
  const double s = t / e_top;

  AngleMatrix scaled(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) scaled.set_eps(i, j, s * eps.eps(i, j));

  FamilyMember member;
  member.scale = s;
  member.arrangement = hyperplane_arrangement(scaled);
  const subspaces::AngleResult ar = subspaces::multi_angle(member.arrangement);
  member.measured_cos = ar.cosine;
  member.degenerate = ar.cosine > 1.0 - 1e-6 || ar.cosine == -1.0;
  return member;
}

std::vector<double> sharp_witness_3d(const AngleMatrix& eps, std::span<const double> d) {
  if (eps.size() != 3) throw input_error("sharp_witness_3d: needs n = 3");
  if (d.size() != 3) throw input_error("sharp_witness_3d: needs three distances");
  for (double di : d)
    if (!(di > 0.0)) throw input_error("sharp_witness_3d: distances must be positive");
  if (!three_subspace_bounds(eps.eps(0, 1), eps.eps(0, 2), eps.eps(1, 2)).feasible)
    throw certificate_error("sharp_witness_3d: triple is not feasible");

  const Matrix w = gram_realize(eps);
  const std::vector<double> x = linalg::solve_spd(eps.matrix(), d);
  std::vector<double> v(w.cols(), 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < w.cols(); ++k) v[k] += x[i] * w(i, k);
  return v;
}

AngleMatrix measured_eps(const subspaces::Arrangement& arr) {
  const std::size_t n = arr.count();
  AngleMatrix am(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const subspaces::AngleResult ar =
          subspaces::friedrichs_angle(arr.subspaces[i], arr.subspaces[j]);
      const double e = std::clamp(ar.cosine, 0.0, 1.0);
      am.set_eps(i, j, e);
    }
  return am;
}

}  // namespace kk::certificates
