#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Data-parallel primitives used by the hot paths (power iteration, block Gram
// assembly, regular-representation operators). Every reduction is blocked with
// a fixed block size and folded in block order, so results are bit-identical
// regardless of thread count and identical to the serial reference in
// kernels::serial. Tests compare the two namespaces directly.

namespace kk::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

// Thread cap. Reads KK_THREADS once; 0 means "no cap beyond OpenMP defaults".
void set_thread_cap(int n);
int thread_count();
void apply_env_thread_cap();

double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double nrm2(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scal(double alpha, std::span<double> x);
void shift(double alpha, std::span<double> x);  // x[i] += alpha

// out[i] += weight * in[index[i]]
void gather_add(std::span<const std::uint32_t> index, std::span<const double> in,
                std::span<double> out, double weight);

// c = a^T b where a is (k x m), b is (k x n), all row-major.
void matmul_at_b(std::span<const double> a, std::size_t k, std::size_t m,
                 std::span<const double> b, std::size_t n, std::span<double> c);

namespace serial {

double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double nrm2(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scal(double alpha, std::span<double> x);
void shift(double alpha, std::span<double> x);
void gather_add(std::span<const std::uint32_t> index, std::span<const double> in,
                std::span<double> out, double weight);
void matmul_at_b(std::span<const double> a, std::size_t k, std::size_t m,
                 std::span<const double> b, std::size_t n, std::span<double> c);

}  // namespace serial

}  // namespace kk::kernels
