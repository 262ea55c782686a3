#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Deflated power iteration shared by the walk estimators and the large-group
// Laplacian path. The operator is T f = sum_g w_g (f o L_g) applied through
// gather tables; the constant function is deflated by subtracting the mean
// each step. All reductions go through the blocked kernels, so a run is
// bit-reproducible for a fixed seed regardless of thread count.

namespace kk::walks_detail {

struct PowerResult {
  double rayleigh = 0.0;   // <v, T v> for the final unit v (<= top eigenvalue)
  double residual = 0.0;   // ||T v - rayleigh * v||
  std::size_t iterations = 0;
  bool converged = false;
};

PowerResult top_eigenvalue_deflated(
    const std::vector<std::vector<std::uint32_t>>& tables,
    const std::vector<double>& weights, std::size_t dim, std::uint64_t seed,
    std::size_t max_iterations, double tolerance);

}  // namespace kk::walks_detail
