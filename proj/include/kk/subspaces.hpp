#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kk/matrix.hpp"

namespace kk::subspaces {

/// Closed subspace of R^ambient_dim given by an orthonormal basis, one basis
/// vector per row. rank == basis.rows(); rank 0 is the zero subspace.
struct Subspace {
  std::size_t ambient_dim = 0;
  Matrix basis;

  std::size_t rank() const { return basis.rows(); }
};

/// Ordered, nonempty family of subspaces of the same ambient space.
struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Subspace> subspaces;

  std::size_t count() const { return subspaces.size(); }
};

struct AngleResult {
  double angle = 0.0;          // radians, [0, pi]
  double cosine = 1.0;         // cos(angle)
  double spectrum_top = 0.0;   // sup of Spec(Sigma) below the intersection cluster
  std::size_t intersection_dim = 0;
};

/// Eigenvalues within n * 1e-8 of n are attributed to the intersection.
inline constexpr double kClusterTol = 1e-8;

/// Orthonormalizes the given spanning vectors (rows); near-dependent inputs
/// (first-pass residual below 1e-9 of the original norm) are dropped.
Subspace orthonormalize(const Matrix& vectors, std::size_t ambient_dim);
Subspace from_rows(const std::vector<std::vector<double>>& rows, std::size_t ambient_dim);

std::vector<double> project(const Subspace& v, std::span<const double> x);
double distance(const Subspace& v, std::span<const double> x);

/// Block Gram matrix of the addition operator: blocks B_i B_j^T over the
/// external direct sum of the subspaces.
SymMatrix sigma_gram(const Arrangement& arr);

/// Spectrum of Sigma (eigenvalues lie in [0, n] up to roundoff).
Spectrum sigma_spectrum(const Arrangement& arr);

/// Friedrichs angle via the Sigma spectrum. Degenerate conventions:
/// equal subspaces -> pi, strict containment -> pi/2 (detected by rank
/// comparison against the intersection). Throws on a zero subspace.
AngleResult friedrichs_angle(const Subspace& v1, const Subspace& v2);

/// Angle of n >= 2 subspaces: 1 + (n-1) cos = sup of Spec(Sigma) with the
/// intersection cluster removed.
AngleResult multi_angle(const Arrangement& arr);

Subspace orthocomplement(const Subspace& v);

/// Multi-angle and intersection from a single Sigma eigendecomposition.
struct Analysis {
  AngleResult angle;
  Subspace intersection;
};
Analysis analyze(const Arrangement& arr);

/// Intersection of all subspaces, spanned by the Sigma eigenvectors at the
/// top cluster mapped back to the ambient space.
Subspace intersect(const Arrangement& arr);

/// Span of the union of two subspaces.
Subspace span_union(const Subspace& v1, const Subspace& v2);

struct Distances {
  double to_intersection = 0.0;       // d0
  std::vector<double> to_subspaces;   // d_i
};
Distances distances(const Arrangement& arr, std::span<const double> v);

/// (cos<V1|V2> d1(v) + d2(v)) / sin<V1|V2>; upper bound for the distance from
/// P_{V1}(v) to the intersection. Angle 0 or pi is out of domain.
double projection_to_intersection_bound(const Subspace& v1, const Subspace& v2,
                                        std::span<const double> v);

/// (n*rho - 1) / (n - 1) for rho in [1/n, 1].
double codistance_to_cosine(double rho, std::size_t n);

}  // namespace kk::subspaces
