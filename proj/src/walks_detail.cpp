#include "kk/walks_detail.hpp"

#include <cmath>
#include <random>

#include "kk/errors.hpp"
#include "kk/kernels.hpp"

namespace kk::walks_detail {

namespace {

void apply_operator(const std::vector<std::vector<std::uint32_t>>& tables,
                    const std::vector<double>& weights,
                    const std::vector<double>& in, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t t = 0; t < tables.size(); ++t)
    kernels::gather_add(tables[t], in, out, weights[t]);
}

void deflate_mean(std::vector<double>& v) {
  const double mean = kernels::sum(v) / static_cast<double>(v.size());
  kernels::shift(-mean, v);
}

}  // namespace

PowerResult top_eigenvalue_deflated(
    const std::vector<std::vector<std::uint32_t>>& tables,
    const std::vector<double>& weights, std::size_t dim, std::uint64_t seed,
    std::size_t max_iterations, double tolerance) {
  if (tables.empty() || tables.size() != weights.size())
    throw input_error("power iteration: bad operator tables");

  std::vector<double> v(dim);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (double& x : v) x = unit(rng);
  deflate_mean(v);
  {
    const double nrm = kernels::nrm2(v);
    if (nrm == 0.0) throw input_error("power iteration: degenerate start vector");
    kernels::scal(1.0 / nrm, v);
  }

  // Iterate on the half-shifted operator (T + I)/2: its spectrum sits in
  // [0, 1], so the dominant eigenvalue in magnitude is the top one, which the
  // plain operator does not guarantee (T can have eigenvalue -1, e.g. on the
  // sign representation).
  std::vector<double> w(dim);
  PowerResult res;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    apply_operator(tables, weights, v, w);
    kernels::scal(0.5, w);
    kernels::axpy(0.5, v, w);
    deflate_mean(w);

    const double rho_shifted = kernels::dot(v, w);
    // residual^2 = ||w||^2 - rho^2 since v is a unit vector
    const double wn2 = kernels::dot(w, w);
    const double r2 = std::max(wn2 - rho_shifted * rho_shifted, 0.0);
    res.rayleigh = 2.0 * rho_shifted - 1.0;
    res.residual = 2.0 * std::sqrt(r2);  // back in unshifted units
    res.iterations = it;
    if (res.residual <= tolerance) {
      res.converged = true;
      break;
    }

    const double wn = std::sqrt(wn2);
    if (wn == 0.0) break;  // v was entirely inside the kernel of the shift
    kernels::scal(1.0 / wn, w);
    std::swap(v, w);
  }
  return res;
}

}  // namespace kk::walks_detail
