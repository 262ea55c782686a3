// Timing comparison of the OpenMP kernels against the serial reference.
// Prints one row per kernel and size: median ns/element for both paths and
// the speedup. The two paths are bit-identical by construction (blocked
// reductions folded in a fixed order); this binary is about throughput.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "kk/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double median_ns(const std::vector<double>& samples) {
  std::vector<double> s = samples;
  std::sort(s.begin(), s.end());
  return s[s.size() / 2];
}

template <typename F>
double time_ns_per_element(F&& fn, std::size_t elements, int reps) {
  std::vector<double> samples;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    samples.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() /
        static_cast<double>(elements));
  }
  return median_ns(samples);
}

void row(const char* name, std::size_t n, double serial, double parallel) {
  std::printf("%-12s n=%-9zu serial %8.3f ns/el  omp %8.3f ns/el  speedup %5.2fx\n",
              name, n, serial, parallel, serial / parallel);
}

volatile double g_sink = 0.0;

}  // namespace

int main() {
  kk::kernels::apply_env_thread_cap();
  std::printf("threads: %d\n", kk::kernels::thread_count());

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (std::size_t n : {std::size_t{100000}, std::size_t{1000000}, std::size_t{4000000}}) {
    std::vector<double> a(n), b(n);
    for (double& v : a) v = unit(rng);
    for (double& v : b) v = unit(rng);
    std::vector<std::uint32_t> idx(n);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (auto& v : idx) v = pick(rng);
    std::vector<double> out(n);

    const int reps = 9;
    row("dot", n,
        time_ns_per_element([&] { g_sink = kk::kernels::serial::dot(a, b); }, n, reps),
        time_ns_per_element([&] { g_sink = kk::kernels::dot(a, b); }, n, reps));
    row("sum", n,
        time_ns_per_element([&] { g_sink = kk::kernels::serial::sum(a); }, n, reps),
        time_ns_per_element([&] { g_sink = kk::kernels::sum(a); }, n, reps));
    row("axpy", n,
        time_ns_per_element([&] { kk::kernels::serial::axpy(1.0001, a, b); }, n, reps),
        time_ns_per_element([&] { kk::kernels::axpy(1.0001, a, b); }, n, reps));
    row("gather_add", n,
        time_ns_per_element([&] { kk::kernels::serial::gather_add(idx, a, out, 0.5); },
                            n, reps),
        time_ns_per_element([&] { kk::kernels::gather_add(idx, a, out, 0.5); }, n, reps));
  }

  // Block Gram shape: C = A^T B with tall skinny A, B.
  for (std::size_t k : {std::size_t{512}, std::size_t{4096}}) {
    const std::size_t m = 64, n = 64;
    std::vector<double> a(k * m), b(k * n), c(m * n);
    for (double& v : a) v = unit(rng);
    for (double& v : b) v = unit(rng);
    const std::size_t flops = 2 * k * m * n;
    row("matmul_at_b", k,
        time_ns_per_element(
            [&] { kk::kernels::serial::matmul_at_b(a, k, m, b, n, c); }, flops, 5),
        time_ns_per_element([&] { kk::kernels::matmul_at_b(a, k, m, b, n, c); }, flops,
                            5));
  }
  return 0;
}
