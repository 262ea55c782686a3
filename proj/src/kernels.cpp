#include "kk/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kk::kernels {

namespace {

int g_thread_cap = 0;

inline std::size_t block_count(std::size_t n) {
  return (n + kReductionBlock - 1) / kReductionBlock;
}

inline double block_partial(std::span<const double> a, std::span<const double> b,
                            std::size_t blk) {
  const std::size_t lo = blk * kReductionBlock;
  const std::size_t hi = std::min(lo + kReductionBlock, a.size());
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
  return s;
}

inline double block_partial_sum(std::span<const double> a, std::size_t blk) {
  const std::size_t lo = blk * kReductionBlock;
  const std::size_t hi = std::min(lo + kReductionBlock, a.size());
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += a[i];
  return s;
}

inline double fold(const std::vector<double>& partials) {
  double s = 0.0;
  for (double p : partials) s += p;
  return s;
}

}  // namespace

void set_thread_cap(int n) {
  g_thread_cap = n;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int thread_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (g_thread_cap > 0 && g_thread_cap < n) n = g_thread_cap;
  return n;
#else
  return 1;
#endif
}

void apply_env_thread_cap() {
  if (const char* env = std::getenv("KK_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) set_thread_cap(n);
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t nb = block_count(a.size());
  std::vector<double> partials(nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(nb); ++blk)
    partials[static_cast<std::size_t>(blk)] =
        block_partial(a, b, static_cast<std::size_t>(blk));
  return fold(partials);
}

double sum(std::span<const double> a) {
  const std::size_t nb = block_count(a.size());
  std::vector<double> partials(nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(nb); ++blk)
    partials[static_cast<std::size_t>(blk)] =
        block_partial_sum(a, static_cast<std::size_t>(blk));
  return fold(partials);
}

double nrm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(double alpha, std::span<double> x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) x[i] *= alpha;
}

void shift(double alpha, std::span<double> x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) x[i] += alpha;
}

void gather_add(std::span<const std::uint32_t> index, std::span<const double> in,
                std::span<double> out, double weight) {
  assert(index.size() == out.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] += weight * in[index[i]];
}

void matmul_at_b(std::span<const double> a, std::size_t k, std::size_t m,
                 std::span<const double> b, std::size_t n, std::span<double> c) {
  assert(a.size() == k * m && b.size() == k * n && c.size() == m * n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    double* ci = c.data() + static_cast<std::size_t>(i) * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double ali = a[l * m + static_cast<std::size_t>(i)];
      const double* bl = b.data() + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ali * bl[j];
    }
  }
}

namespace serial {

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t nb = block_count(a.size());
  std::vector<double> partials(nb);
  for (std::size_t blk = 0; blk < nb; ++blk) partials[blk] = block_partial(a, b, blk);
  return fold(partials);
}

double sum(std::span<const double> a) {
  const std::size_t nb = block_count(a.size());
  std::vector<double> partials(nb);
  for (std::size_t blk = 0; blk < nb; ++blk) partials[blk] = block_partial_sum(a, blk);
  return fold(partials);
}

double nrm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scal(double alpha, std::span<double> x) {
  for (double& v : x) v *= alpha;
}

void shift(double alpha, std::span<double> x) {
  for (double& v : x) v += alpha;
}

void gather_add(std::span<const std::uint32_t> index, std::span<const double> in,
                std::span<double> out, double weight) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += weight * in[index[i]];
}

void matmul_at_b(std::span<const double> a, std::size_t k, std::size_t m,
                 std::span<const double> b, std::size_t n, std::span<double> c) {
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double ali = a[l * m + i];
      const double* bl = b.data() + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ali * bl[j];
    }
  }
}

}  // namespace serial

}  // namespace kk::kernels
