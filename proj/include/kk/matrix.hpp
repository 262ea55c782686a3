#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace kk {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::vector<double> multiply(const Matrix& a, std::span<const double> x);
double max_abs(const Matrix& a);

/// Symmetric matrix with full mirrored storage: set() writes both triangles,
/// so entries(i,j) == entries(j,i) holds exactly at all times.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : full_(n, n) {}

  static SymMatrix identity(std::size_t n) {
    SymMatrix s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, i, 1.0);
    return s;
  }

  /// Symmetrizes off-diagonal pairs that differ by float noise; throws
  /// kk::input_error if they differ materially.
  static SymMatrix from_matrix(const Matrix& m, double tol = 1e-12);

  std::size_t size() const { return full_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return full_(i, j); }

  void set(std::size_t i, std::size_t j, double v) {
    full_(i, j) = v;
    full_(j, i) = v;
  }

  const Matrix& full() const { return full_; }

 private:
  Matrix full_;
};

/// Eigenvalues sorted ascending; eigenvectors (when present) are orthonormal
/// columns aligned with the values.
struct Spectrum {
  std::vector<double> values;
  std::optional<Matrix> vectors;

  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

}  // namespace kk
