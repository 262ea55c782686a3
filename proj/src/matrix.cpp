#include "kk/matrix.hpp"

#include <cmath>

#include "kk/errors.hpp"
#include "kk/kernels.hpp"

namespace kk {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw input_error("multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      auto bl = b.row(l);
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw input_error("multiply: vector length mismatch");
  std::vector<double> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    y[i] = kernels::serial::dot(a.row(i), x);
  return y;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::fabs(v));
  return m;
}

SymMatrix SymMatrix::from_matrix(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw input_error("SymMatrix: matrix not square");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, max_abs(m));
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.set(i, i, m(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(m(i, j) - m(j, i)) > tol * scale)
        throw input_error("SymMatrix: input not symmetric");
      s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    }
  }
  return s;
}

}  // namespace kk
