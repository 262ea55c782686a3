#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kk/certificates.hpp"
#include "kk/matrix.hpp"
#include "kk/subspaces.hpp"

namespace kk::groups {

/// Permutation of {0, ..., k-1} given by its image sequence.
struct Permutation {
  std::vector<std::uint32_t> img;
};

/// Square matrix over F_p, row-major, entries in [0, p).
struct MatrixModP {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::vector<std::uint8_t> a;
};

/// Square real matrix compared with snap tolerance 1e-9 during closure.
struct MatrixReal {
  std::size_t n = 0;
  std::vector<double> a;
};

using GroupElement = std::variant<Permutation, MatrixModP, MatrixReal>;

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement identity_like(const GroupElement& x);

/// Finite group from a breadth-first closure of its generators. Elements are
/// indexed with the identity at index 0; left-multiplication tables by each
/// generator are recorded during the closure.
class FiniteGroup {
 public:
  std::size_t size() const { return elements_.size(); }
  std::size_t generator_count() const { return generator_index_.size(); }
  std::uint32_t generator(std::size_t g) const { return generator_index_[g]; }

  const GroupElement& element(std::uint32_t i) const { return elements_[i]; }
  const std::vector<std::uint32_t>& generator_action(std::size_t g) const {
    return action_[g];
  }

  std::uint32_t index_of(const GroupElement& e) const;    // throws if absent
  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inverse_of(std::uint32_t x) const;

  /// Left-multiplication table for an arbitrary element.
  std::vector<std::uint32_t> left_action(std::uint32_t x) const;

  friend FiniteGroup enumerate_group(const std::vector<GroupElement>& generators,
                                     std::uint64_t cap);

 private:
  std::vector<GroupElement> elements_;
  std::vector<std::vector<std::uint32_t>> action_;  // per generator
  std::vector<std::uint32_t> generator_index_;
  // canonical key -> candidate indices (bucket may hold several for MatrixReal)
  std::unordered_map<std::string, std::vector<std::uint32_t>> index_;

  std::optional<std::uint32_t> find(const GroupElement& e) const;
};

FiniteGroup enumerate_group(const std::vector<GroupElement>& generators,
                            std::uint64_t cap);

/// Closure of the given element indices inside the group; identity included.
std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<std::uint32_t>& h);

enum class GapMethod { dense_eigen, power_iteration };

struct LaplacianGap {
  double gap = 0.0;
  GapMethod method = GapMethod::dense_eigen;
  std::size_t iterations = 0;
  double residual = 0.0;  // 0 for the dense path
};

/// Smallest nonzero eigenvalue of (1/|S|) sum_{s in S} (Id - pi(s)) on the
/// regular representation. Dense eigensolve for |G| <= 2000, power iteration
/// with a residual bar above that. S must be symmetric (closed under inverse).
LaplacianGap regular_laplacian_gap(const FiniteGroup& g,
                                   const std::vector<std::uint32_t>& s,
                                   std::uint64_t seed = 1,
                                   std::size_t max_iterations = 200000);

/// Friedrichs angle between the fixed subspaces of two subgroups in the
/// regular representation. The regular representation contains every
/// irreducible, so this is the infimum over all representations.
subspaces::AngleResult fixed_space_angle(const FiniteGroup& g,
                                         const std::vector<std::uint32_t>& h1,
                                         const std::vector<std::uint32_t>& h2);

/// Kazhdan lower bound from pairwise angle bounds: displacement *
/// sqrt(lambda_min / n). The default displacement sqrt(2) is the general
/// finite-subgroup value (some element of a subgroup moves any unit vector by
/// at least sqrt(2)).
double observation_bound(const certificates::AngleMatrix& pair_bounds,
                         double per_subgroup_displacement = std::numbers::sqrt2);

struct SteinbergCertificate {
  certificates::Certificate certificate;
  double epsilon = 0.0;               // p^{-1/2}
  double all_ones_residual = 0.0;     // ||A 1 - (1 - 2 eps) 1||
  std::optional<double> kazhdan_bound;  // sqrt(2 lambda_min / n) when pd
  double floor_bound = 0.0;           // sqrt(1 / (5 n))
};

/// Certificate for the n-cycle pattern with eps = p^{-1/2} on the cycle;
/// positive definite exactly when p >= 5 (n >= 3, p prime).
SteinbergCertificate steinberg_certificate(std::size_t n, std::uint64_t p);

struct KacMoodyCertificate {
  certificates::Certificate certificate;
  double epsilon = 0.0;
  bool regular = false;
  std::size_t degree = 0;                     // k for k-regular graphs
  std::optional<double> predicted_lambda_min;  // 1 - k p^{-1/2} when regular
};

/// Certificate matrix I - p^{-1/2} Adj for a simple undirected graph.
KacMoodyCertificate kac_moody_certificate(const std::vector<std::vector<int>>& adjacency,
                                          std::uint64_t p);

bool is_prime(std::uint64_t p);

// Preset constructions used by the CLI and the test oracles.
struct GroupWithSubgroups {
  FiniteGroup group;
  std::vector<std::vector<std::uint32_t>> subgroups;  // full subgroups, identity included
};

GroupWithSubgroups preset_sym(std::size_t k);                      // adjacent transpositions
GroupWithSubgroups preset_dihedral(std::size_t m);                 // two reflections
GroupWithSubgroups preset_heisenberg(std::uint32_t p);             // the two generating cyclics
GroupWithSubgroups preset_sl(std::size_t n, std::uint32_t p, char variant,
                             std::uint64_t cap = 10000000);
GroupWithSubgroups from_real_matrices(const std::vector<Matrix>& generators,
                                      std::uint64_t cap = 10000000);

}  // namespace kk::groups
