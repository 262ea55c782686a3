#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kk/matrix.hpp"

namespace kk::linalg {

enum class PdStatus { positive_definite, boundary_singular, indefinite };

struct CholeskyResult {
  PdStatus status = PdStatus::positive_definite;
  std::size_t failure_pivot = 0;  // first pivot index outside tolerance, if any
  Matrix factor;                  // lower-triangular L with A = L L^T (pd only)

  bool is_pd() const { return status == PdStatus::positive_definite; }
};

/// Pivot threshold used to separate "boundary/singular" from "indefinite":
/// 1e-12 times the largest diagonal entry.
double pd_tolerance(const SymMatrix& a);

/// Full spectrum by cyclic Jacobi sweeps in a fixed (row-major) pivot order.
/// Off-diagonal threshold 1e-13 * ||A||_F, at most 100 sweeps, so the result
/// is deterministic for a fixed input. Throws kk::input_error on non-finite
/// entries.
Spectrum sym_eigen(const SymMatrix& a, bool with_vectors = true);

/// Cholesky factorization with three-way classification. Pivots within
/// [-tol, tol] stop the factorization as boundary_singular; pivots below -tol
/// as indefinite.
CholeskyResult cholesky_pd(const SymMatrix& a);

/// Solve A x = b for positive definite A. Throws kk::certificate_error when A
/// fails the definiteness check.
std::vector<double> solve_spd(const SymMatrix& a, std::span<const double> b);

/// Convenience: x^T A^{-1} y via one factorization.
double inverse_quadratic_form(const SymMatrix& a, std::span<const double> x,
                              std::span<const double> y);

}  // namespace kk::linalg
