#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kk/linalg.hpp"
#include "kk/matrix.hpp"
#include "kk/subspaces.hpp"

namespace kk::certificates {

/// Symmetric certificate matrix: unit diagonal, -eps_ij off the diagonal,
/// where eps_ij bounds the cosine of the pairwise angle. Entries are kept in
/// [0, 1]; eps == 1 is the boundary model for an unconstrained pair and is
/// rejected by operations whose formulas require eps < 1.
class AngleMatrix {
 public:
  explicit AngleMatrix(std::size_t n);
  static AngleMatrix from_eps(const Matrix& eps);
  static AngleMatrix uniform(std::size_t n, double eps);

  std::size_t size() const { return a_.size(); }
  double eps(std::size_t i, std::size_t j) const { return i == j ? 0.0 : -a_(i, j); }
  void set_eps(std::size_t i, std::size_t j, double e);
  const SymMatrix& matrix() const { return a_; }

 private:
  SymMatrix a_;
};

struct Certificate {
  linalg::PdStatus status = linalg::PdStatus::indefinite;
  double lambda_min = 0.0;
  double angle_lower_bound = 0.0;   // radians; meaningful when positive definite
  std::optional<double> m_value;    // 1^T A^{-1} 1, present only when pd
};

/// Positive-definiteness certificate: when A is pd the multi-subspace angle of
/// any arrangement with cos<V_i|V_j> <= eps_ij is at least
/// arccos(1 - lambda_min/(n-1)), and M = 1^T A^{-1} 1 is reported.
Certificate build_certificate(const AngleMatrix& eps);

/// d^T A^{-1} d: upper bound for the squared distance to the intersection
/// given per-subspace distances d.
double distance_bound(const AngleMatrix& eps, std::span<const double> d);

/// Builds the (n+1)x(n+1) bordered matrix with corner d0^2, border d, block A
/// and reports whether it fails positive definiteness (it must, for distances
/// measured on a real arrangement).
bool residual_matrix_check(const AngleMatrix& eps, double d0, std::span<const double> d);

struct ThreeSubspaceBounds {
  double plane_bound_sq = 0.0;  // bound for cos^2 <V1+V2 | V3> (and intersections)
  double pair_bound = 0.0;      // bound for cos <V1+V3 | V2+V3> (and intersections)
  bool feasible = false;        // eps12^2+eps23^2+eps13^2+2 eps12 eps23 eps13 < 1
};
ThreeSubspaceBounds three_subspace_bounds(double e12, double e13, double e23);

/// lambda_min(A_eps)/2: lower bound for 1 - cos<V1|V2,V3> of a feasible triple.
double corollary3_bound(double e12, double e13, double e23);

/// Unit vectors (rows) with Gram matrix equal to A; they live in dimension
/// rank(A). Indefinite matrices are not realizable.
Matrix gram_realize(const AngleMatrix& eps);

/// Arrangement of the hyperplanes orthogonal to the Gram realization vectors.
/// For pd matrices its multi-angle attains the certificate bound.
subspaces::Arrangement hyperplane_arrangement(const AngleMatrix& eps);

struct FamilyMember {
  subspaces::Arrangement arrangement;
  double scale = 0.0;         // off-diagonal scale factor actually applied
  double measured_cos = 0.0;  // multi-angle cosine of the member
  bool degenerate = false;    // measured cos > 1 - 1e-6, or all members equal
};

/// Continuation toward the boundary for a non-pd eps: scales the off-diagonal
/// entries so lambda_min becomes (1-t) and realizes the hyperplane
/// arrangement; as t -> 1 the multi-angle tends to 0.
FamilyMember degenerate_family(const AngleMatrix& eps, double t);

/// Vector in the 3-dimensional hyperplane arrangement whose distances to the
/// three planes are exactly d and whose squared norm is d^T A^{-1} d.
std::vector<double> sharp_witness_3d(const AngleMatrix& eps, std::span<const double> d);

/// Measured pairwise cosines of an arrangement, clamped into [0, 1); the
/// clamped values only weaken the certificate.
AngleMatrix measured_eps(const subspaces::Arrangement& arr);

}  // namespace kk::certificates
