#include "kk/walks.hpp"

#include <cmath>
#include <numbers>

#include "kk/coxeter.hpp"
#include "kk/errors.hpp"
#include "kk/linalg.hpp"
#include "kk/walks_detail.hpp"

namespace kk::walks {

namespace {

using std::numbers::pi;

groups::GroupWithSubgroups build_group(const WalkSpec& spec) {
  switch (spec.family) {
    case WalkSpec::Family::sl:
      return groups::preset_sl(spec.n, static_cast<std::uint32_t>(spec.p), spec.variant,
                               spec.enumeration_cap);
    case WalkSpec::Family::coxeter: {
      const coxeter::CoxeterSystem sys =
          coxeter::catalogued_system(spec.type_label, spec.rank_or_m);
      return groups::from_real_matrices(coxeter::defining_representation(sys),
                                        spec.enumeration_cap);
    }
    case WalkSpec::Family::custom:
      if (!spec.custom) throw input_error("empirical_gap: custom spec without a group");
      return *spec.custom;
  }
  throw input_error("empirical_gap: bad family");
}

double certificate_for(const WalkSpec& spec) {
  switch (spec.family) {
    case WalkSpec::Family::sl:
      return sl_certificate(spec.n, spec.p, spec.variant).bound;
    case WalkSpec::Family::coxeter: {
      const coxeter::CoxeterSystem sys =
          coxeter::catalogued_system(spec.type_label, spec.rank_or_m);
      return coxeter::coxeter_report(sys).spectral_gap;
    }
    case WalkSpec::Family::custom:
      return 0.0;
  }
  return 0.0;
}

}  // namespace

SlCertificate sl_certificate(std::size_t n, std::uint64_t p, char variant) {
  if (n < 3) throw input_error("sl_certificate: needs n >= 3");
  if (!groups::is_prime(p)) throw input_error("sl_certificate: p must be prime");
  if (p < 5) throw input_error("sl_certificate: needs p >= 5");
  if (variant != 'a' && variant != 'b' && variant != 'c')
    throw input_error("sl_certificate: variant must be a, b or c");

  SlCertificate cert;
  const double base =
      (1.0 - 2.0 / std::sqrt(static_cast<double>(p))) / static_cast<double>(n);
  if (variant == 'c') {
    cert.bound = base / 20.0;
    cert.floor = 1.0 / (200.0 * static_cast<double>(n));
  } else {
    cert.bound = base;
    cert.floor = 1.0 / (10.0 * static_cast<double>(n));
  }
  return cert;
}

GapEstimate empirical_gap(const WalkSpec& spec) {
  const groups::GroupWithSubgroups gw = build_group(spec);
  const groups::FiniteGroup& g = gw.group;

  // Averaging operator: uniform over the nonidentity elements of each block,
  // blocks weighted equally.
  std::vector<std::vector<std::uint32_t>> tables;
  std::vector<double> weights;
  const double block_weight = 1.0 / static_cast<double>(gw.subgroups.size());
  for (const auto& block : gw.subgroups) {
    std::size_t nontrivial = 0;
    for (std::uint32_t e : block)
      if (e != 0) ++nontrivial;
    if (nontrivial == 0) throw input_error("empirical_gap: block has no elements");
    const double w = block_weight / static_cast<double>(nontrivial);
    for (std::uint32_t e : block) {
      if (e == 0) continue;
      tables.push_back(g.left_action(e));
      weights.push_back(w);
    }
  }

  const walks_detail::PowerResult pr = walks_detail::top_eigenvalue_deflated(
      tables, weights, g.size(), spec.seed, spec.max_iterations, spec.tolerance);

  GapEstimate est;
  est.lower_certificate = certificate_for(spec);
  est.empirical = 1.0 - pr.rayleigh;
  est.residual = pr.residual;
  est.relaxation_time = 1.0 / est.empirical;
  est.mixing_time_bound =
      mixing_time(est.empirical, static_cast<double>(g.size()), 0.25);
  est.seed = spec.seed;
  est.iterations = pr.iterations;
  est.group_order = g.size();
  est.converged = pr.converged;
  est.flagged = est.empirical < est.lower_certificate - est.residual;
  return est;
}

SoGap so_gap(std::size_t n, char variant) {
  if (n < 2) throw input_error("so_gap: needs n >= 2");
  if (variant != 'a' && variant != 'b') throw input_error("so_gap: variant must be a or b");
  const double nn = static_cast<double>(n);
  SoGap gap;
  const double s = std::sin(pi / (2.0 * nn + 2.0));
  gap.bound = 2.0 / nn * s * s;
  if (variant == 'b') gap.maslen = (nn + 3.0) / (2.0 * nn * (nn + 1.0));
  return gap;
}

HarmonicCheck harmonic2_check(std::size_t n) {
  if (n < 2 || n > 12) throw input_error("harmonic2_check: n must be in [2, 12]");
  const std::size_t d = n + 1;

  // Orthonormal basis of symmetric traceless d x d matrices under the
  // Frobenius inner product: (e_i e_j^T + e_j e_i^T)/sqrt(2) for i<j and the
  // d-1 diagonal traceless combinations diag(1,..,1,-k,0,..)/sqrt(k(k+1)).
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix b(d, d);
      b(i, j) = b(j, i) = 1.0 / std::numbers::sqrt2;
      basis.push_back(std::move(b));
    }
  for (std::size_t k = 1; k < d; ++k) {
    Matrix b(d, d);
    const double nrm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (std::size_t i = 0; i < k; ++i) b(i, i) = 1.0 / nrm;
    b(k, k) = -static_cast<double>(k) / nrm;
    basis.push_back(std::move(b));
  }
  const std::size_t dim = basis.size();

  auto frobenius = [d](const Matrix& x, const Matrix& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) s += x(i, j) * y(i, j);
    return s;
  };

  // Averaged rotation action per circle subgroup; 8 points are exact here
  // because X -> R X R^T has Fourier frequencies at most 2 along a circle.
  Matrix delta(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) delta(i, i) = 1.0;

  for (std::size_t plane = 0; plane + 1 < d; ++plane) {
    Matrix avg(dim, dim);
    for (int k = 0; k < 8; ++k) {
      const double theta = 2.0 * pi * k / 8.0;
      Matrix r = Matrix::identity(d);
      r(plane, plane) = std::cos(theta);
      r(plane + 1, plane + 1) = std::cos(theta);
      r(plane, plane + 1) = -std::sin(theta);
      r(plane + 1, plane) = std::sin(theta);
      const Matrix rt = transpose(r);
      for (std::size_t b = 0; b < dim; ++b) {
        const Matrix acted = multiply(multiply(r, basis[b]), rt);
        for (std::size_t a = 0; a < dim; ++a)
          avg(a, b) += frobenius(basis[a], acted) / 8.0;
      }
    }
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        delta(a, b) -= avg(a, b) / static_cast<double>(n);
  }

  const Spectrum spec =
      linalg::sym_eigen(SymMatrix::from_matrix(delta, 1e-9), /*with_vectors=*/false);

  HarmonicCheck check;
  check.dimension = dim;
  for (double lam : spec.values) {
    if (lam <= 1e-8) {
      ++check.invariant_count;
    } else if (check.gap == 0.0) {
      check.gap = lam;
    }
  }
  return check;
}

double mixing_time(double gap, double group_order, double accuracy) {
  if (!(gap > 0.0)) throw input_error("mixing_time: gap must be positive");
  if (!(group_order >= 1.0) || !(accuracy > 0.0))
    throw input_error("mixing_time: bad order or accuracy");
  return std::log(std::sqrt(group_order) / accuracy) / gap;
}

}  // namespace kk::walks
