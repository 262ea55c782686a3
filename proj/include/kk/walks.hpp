#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kk/groups.hpp"

namespace kk::walks {

struct SlCertificate {
  double bound = 0.0;  // (1/n)(1 - 2 p^{-1/2}), scaled by 1/20 for variant c
  double floor = 0.0;  // 1/(10n) for a/b, 1/(200n) for c
};

/// Spectral-gap certificate for the random walk on SL_n(F_p) with the cycle
/// of root subgroups (a), all root subgroups (b), or the +-1 elementary
/// element set (c, which carries the fixed factor 1/20 from the rank-one
/// reduction step).
SlCertificate sl_certificate(std::size_t n, std::uint64_t p, char variant);

struct WalkSpec {
  enum class Family { sl, coxeter, custom };
  Family family = Family::sl;

  // sl parameters
  std::size_t n = 3;
  std::uint64_t p = 5;
  char variant = 'a';

  // coxeter parameters
  std::string type_label = "A";
  std::size_t rank_or_m = 2;

  // custom: caller-supplied group and generating subgroups/sets
  std::optional<groups::GroupWithSubgroups> custom;

  std::uint64_t seed = 1;
  std::size_t max_iterations = 100000;
  double tolerance = 1e-10;
  std::uint64_t enumeration_cap = 10000000;
};

struct GapEstimate {
  double lower_certificate = 0.0;
  double empirical = 0.0;
  double residual = 0.0;
  double relaxation_time = 0.0;   // 1 / empirical
  double mixing_time_bound = 0.0; // at total-variation accuracy 1/4
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::size_t group_order = 0;
  bool converged = false;
  bool flagged = false;           // empirical < certificate - residual
};

/// Power-iteration estimate of the spectral gap of the averaging operator for
/// the generating measure that is uniform on the nonidentity part of each
/// subgroup and averaged across subgroups (a plain element set is a single
/// block). Deterministic for a fixed seed.
GapEstimate empirical_gap(const WalkSpec& spec);

struct SoGap {
  double bound = 0.0;             // (2/n) sin^2(pi/(2n+2))
  std::optional<double> maslen;   // (n+3)/(2n(n+1)), reported for variant b
};
SoGap so_gap(std::size_t n, char variant);

struct HarmonicCheck {
  double gap = 0.0;                 // smallest nonzero eigenvalue
  std::size_t invariant_count = 0;  // expected 0
  std::size_t dimension = 0;        // (n+1)(n+2)/2 - 1
};

/// Laplacian gap on the harmonic degree-2 representation: rotations act on
/// symmetric traceless matrices, circle averages use 8 points (exact for
/// frequencies <= 2). Valid for 2 <= n <= 12.
HarmonicCheck harmonic2_check(std::size_t n);

/// (1/gap) * ln(sqrt(order)/accuracy): relaxation-to-mixing upper bound.
double mixing_time(double gap, double group_order, double accuracy);

}  // namespace kk::walks
