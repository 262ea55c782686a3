#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kk/certificates.hpp"
#include "kk/matrix.hpp"

namespace kk::coxeter {

/// Coxeter system of the given rank: m(i,i) == 1, m(i,j) >= 2 for i != j, and
/// m(i,j) == 0 encodes an infinite bond (cos pi/m == 1).
struct CoxeterSystem {
  std::size_t rank = 0;
  std::vector<std::vector<int>> m;
  std::string label;  // A, B, D, E6, E7, E8, F4, H3, H4, I2(m), or "custom"
};

struct CoxeterReport {
  double coxeter_number = 0.0;  // h; derived from lambda_min for custom systems
  double lambda_min = 0.0;      // smallest eigenvalue of the cosine matrix
  double spectral_gap = 0.0;    // 2 lambda_min / n
  double m_value = 0.0;         // 1^T A^{-1} 1
  double kazhdan = 0.0;         // 2 M^{-1/2}
};

/// Standard Coxeter matrix for a catalogued label. For types A/B/D the second
/// argument is the rank; for I2 it is the bond order m.
CoxeterSystem catalogued_system(const std::string& type_label, std::size_t rank_or_m);
CoxeterSystem custom_system(const std::vector<std::vector<int>>& m);

/// eps_ij = cos(pi / m_ij).
certificates::AngleMatrix cos_matrix(const CoxeterSystem& sys);

/// Finite iff the cosine matrix is positive definite.
bool is_finite(const CoxeterSystem& sys);

CoxeterReport coxeter_report(const CoxeterSystem& sys);

/// The n reflection matrices of the defining representation, built from the
/// Gram realization of the cosine matrix (one code path for all types).
std::vector<Matrix> defining_representation(const CoxeterSystem& sys);

struct Witness {
  std::vector<double> vector;  // unit vector in the defining representation
  double epsilon0 = 0.0;       // max over generators of ||s_i v - v||
};
Witness kazhdan_witness(const CoxeterSystem& sys);

/// Catalogued closed forms (throws for custom systems).
double closed_form_m(const CoxeterSystem& sys);
double closed_form_coxeter_number(const CoxeterSystem& sys);
std::size_t group_order(const CoxeterSystem& sys);

std::vector<std::string> catalogued_labels();

}  // namespace kk::coxeter
