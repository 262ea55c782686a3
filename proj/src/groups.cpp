#include "kk/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <random>

#include "kk/errors.hpp"
#include "kk/kernels.hpp"
#include "kk/linalg.hpp"
#include "kk/walks_detail.hpp"

namespace kk::groups {

namespace {

constexpr double kSnapTol = 1e-9;      // element identity tolerance
constexpr double kBucketGrid = 1e-4;   // spatial-hash grid for real matrices
constexpr std::size_t kDenseLimit = 2000;

std::string key_of(const GroupElement& e) {
  std::string key;
  if (const auto* perm = std::get_if<Permutation>(&e)) {
    key.push_back('P');
    key.append(reinterpret_cast<const char*>(perm->img.data()),
               perm->img.size() * sizeof(std::uint32_t));
  } else if (const auto* mod = std::get_if<MatrixModP>(&e)) {
    key.push_back('M');
    key.append(reinterpret_cast<const char*>(mod->a.data()), mod->a.size());
  } else {
    const auto& real = std::get<MatrixReal>(e);
    key.push_back('R');
    for (double v : real.a) {
      const std::int64_t q = std::llround(v / kBucketGrid);
      key.append(reinterpret_cast<const char*>(&q), sizeof(q));
    }
  }
  return key;
}

bool equal_elements(const GroupElement& x, const GroupElement& y) {
  if (x.index() != y.index()) return false;
  if (const auto* px = std::get_if<Permutation>(&x))
    return px->img == std::get<Permutation>(y).img;
  if (const auto* mx = std::get_if<MatrixModP>(&x))
    return mx->a == std::get<MatrixModP>(y).a && mx->p == std::get<MatrixModP>(y).p;
  const auto& rx = std::get<MatrixReal>(x);
  const auto& ry = std::get<MatrixReal>(y);
  if (rx.a.size() != ry.a.size()) return false;
  for (std::size_t i = 0; i < rx.a.size(); ++i)
    if (std::fabs(rx.a[i] - ry.a[i]) > kSnapTol) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (x.index() != y.index()) throw input_error("multiply: mixed element kinds");
  if (const auto* px = std::get_if<Permutation>(&x)) {
    const auto& py = std::get<Permutation>(y);
    if (px->img.size() != py.img.size()) throw input_error("multiply: size mismatch");
    Permutation r;
    r.img.resize(px->img.size());
    for (std::size_t i = 0; i < r.img.size(); ++i) r.img[i] = px->img[py.img[i]];
    return r;
  }
  if (const auto* mx = std::get_if<MatrixModP>(&x)) {
    const auto& my = std::get<MatrixModP>(y);
    if (mx->n != my.n || mx->p != my.p) throw input_error("multiply: shape mismatch");
    const std::uint32_t n = mx->n;
    MatrixModP r{n, mx->p, std::vector<std::uint8_t>(n * n, 0)};
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint64_t xik = mx->a[i * n + k];
        if (!xik) continue;
        for (std::uint32_t j = 0; j < n; ++j)
          r.a[i * n + j] = static_cast<std::uint8_t>(
              (r.a[i * n + j] + xik * my.a[k * n + j]) % mx->p);
      }
    return r;
  }
  const auto& rx = std::get<MatrixReal>(x);
  const auto& ry = std::get<MatrixReal>(y);
  if (rx.n != ry.n) throw input_error("multiply: shape mismatch");
  const std::size_t n = rx.n;
  MatrixReal r{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double xik = rx.a[i * n + k];
      for (std::size_t j = 0; j < n; ++j) r.a[i * n + j] += xik * ry.a[k * n + j];
    }
  return r;
}

GroupElement inverse(const GroupElement& x) {
  if (const auto* perm = std::get_if<Permutation>(&x)) {
    Permutation r;
    r.img.resize(perm->img.size());
    for (std::uint32_t i = 0; i < perm->img.size(); ++i) r.img[perm->img[i]] = i;
    return r;
  }
  if (const auto* mod = std::get_if<MatrixModP>(&x)) {
    // Gauss-Jordan over F_p.
    const std::uint32_t n = mod->n, p = mod->p;
    std::vector<std::uint64_t> a(n * n), inv(n * n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod->a[i];
    for (std::uint32_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t pivot = c;
      while (pivot < n && a[pivot * n + c] == 0) ++pivot;
      if (pivot == n) throw input_error("inverse: singular matrix mod p");
      if (pivot != c)
        for (std::uint32_t j = 0; j < n; ++j) {
          std::swap(a[pivot * n + j], a[c * n + j]);
          std::swap(inv[pivot * n + j], inv[c * n + j]);
        }
      const std::uint64_t s = mod_inverse(a[c * n + c], p);
      for (std::uint32_t j = 0; j < n; ++j) {
        a[c * n + j] = a[c * n + j] * s % p;
        inv[c * n + j] = inv[c * n + j] * s % p;
      }
      for (std::uint32_t r = 0; r < n; ++r) {
        if (r == c || a[r * n + c] == 0) continue;
        const std::uint64_t f = p - a[r * n + c];
        for (std::uint32_t j = 0; j < n; ++j) {
          a[r * n + j] = (a[r * n + j] + f * a[c * n + j]) % p;
          inv[r * n + j] = (inv[r * n + j] + f * inv[c * n + j]) % p;
        }
      }
    }
    MatrixModP r{n, p, std::vector<std::uint8_t>(n * n)};
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = static_cast<std::uint8_t>(inv[i]);
    return r;
  }
  // Real matrices: Gaussian elimination with partial pivoting.
  const auto& real = std::get<MatrixReal>(x);
  const std::size_t n = real.n;
  std::vector<double> a = real.a;
  std::vector<double> inv(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r * n + c]) > std::fabs(a[pivot * n + c])) pivot = r;
    if (std::fabs(a[pivot * n + c]) < 1e-12)
      throw input_error("inverse: singular real matrix");
    if (pivot != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[c * n + j]);
        std::swap(inv[pivot * n + j], inv[c * n + j]);
      }
    const double s = 1.0 / a[c * n + c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] *= s;
      inv[c * n + j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r * n + c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[c * n + j];
        inv[r * n + j] -= f * inv[c * n + j];
      }
    }
  }
  return MatrixReal{n, std::move(inv)};
}

GroupElement identity_like(const GroupElement& x) {
  if (const auto* perm = std::get_if<Permutation>(&x)) {
    Permutation r;
    r.img.resize(perm->img.size());
    for (std::uint32_t i = 0; i < perm->img.size(); ++i) r.img[i] = i;
    return r;
  }
  if (const auto* mod = std::get_if<MatrixModP>(&x)) {
    MatrixModP r{mod->n, mod->p, std::vector<std::uint8_t>(mod->n * mod->n, 0)};
    for (std::uint32_t i = 0; i < mod->n; ++i) r.a[i * mod->n + i] = 1;
    return r;
  }
  const auto& real = std::get<MatrixReal>(x);
  MatrixReal r{real.n, std::vector<double>(real.n * real.n, 0.0)};
  for (std::size_t i = 0; i < real.n; ++i) r.a[i * real.n + i] = 1.0;
  return r;
}

std::optional<std::uint32_t> FiniteGroup::find(const GroupElement& e) const {
  const auto it = index_.find(key_of(e));
  if (it == index_.end()) return std::nullopt;
  for (std::uint32_t idx : it->second)
    if (equal_elements(elements_[idx], e)) return idx;
  return std::nullopt;
}

std::uint32_t FiniteGroup::index_of(const GroupElement& e) const {
  if (const auto idx = find(e)) return *idx;
  throw input_error("element not in group");
}

std::uint32_t FiniteGroup::multiply(std::uint32_t x, std::uint32_t y) const {
  return index_of(groups::multiply(elements_[x], elements_[y]));
}

std::uint32_t FiniteGroup::inverse_of(std::uint32_t x) const {
  return index_of(groups::inverse(elements_[x]));
}

std::vector<std::uint32_t> FiniteGroup::left_action(std::uint32_t x) const {
  std::vector<std::uint32_t> table(size());
  for (std::uint32_t i = 0; i < size(); ++i)
    table[i] = index_of(groups::multiply(elements_[x], elements_[i]));
  return table;
}

FiniteGroup enumerate_group(const std::vector<GroupElement>& generators,
                            std::uint64_t cap) {
  if (generators.empty()) throw input_error("enumerate_group: no generators");
  FiniteGroup g;
  const GroupElement id = identity_like(generators[0]);
  g.elements_.push_back(id);
  g.index_[key_of(id)].push_back(0);
  g.action_.assign(generators.size(), {});

  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      GroupElement y = multiply(generators[gi], g.elements_[x]);
      std::uint32_t yi;
      if (const auto found = g.find(y)) {
        yi = *found;
      } else {
        if (g.elements_.size() >= cap)
          throw input_error("enumerate_group: closure exceeds cap");
        yi = static_cast<std::uint32_t>(g.elements_.size());
        g.index_[key_of(y)].push_back(yi);
        g.elements_.push_back(std::move(y));
        queue.push_back(yi);
      }
      auto& table = g.action_[gi];
      if (table.size() < g.elements_.size()) table.resize(g.elements_.size(), 0);
      table[x] = yi;
    }
  }
  const std::size_t order = g.elements_.size();
  for (auto& table : g.action_) table.resize(order);

  g.generator_index_.reserve(generators.size());
  for (const GroupElement& gen : generators)
    g.generator_index_.push_back(g.index_of(gen));
  return g;
}

std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& gens) {
  std::vector<bool> seen(g.size(), false);
  seen[0] = true;
  std::vector<std::uint32_t> members{0};
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t gen : gens) {
      const std::uint32_t y = g.multiply(gen, x);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<std::uint32_t>& h) {
  if (h.empty()) return false;
  std::vector<bool> in(g.size(), false);
  for (std::uint32_t x : h) in[x] = true;
  if (!in[0]) return false;
  for (std::uint32_t x : h)
    for (std::uint32_t y : h)
      if (!in[g.multiply(x, y)]) return false;
  return true;
}

namespace {

// Dense Laplacian of the regular representation for the element set S.
SymMatrix dense_laplacian(const FiniteGroup& g, const std::vector<std::uint32_t>& s) {
  const std::size_t n = g.size();
  Matrix delta(n, n);
  for (std::size_t i = 0; i < n; ++i) delta(i, i) = 1.0;
  const double w = 1.0 / static_cast<double>(s.size());
  for (std::uint32_t si : s) {
    const std::vector<std::uint32_t> act = g.left_action(si);
    // pi(s) f (x) = f(s^{-1} x); entry (x, s^{-1}x) of pi(s) is 1, i.e.
    // column y contributes at row s*y.
    for (std::uint32_t y = 0; y < n; ++y) delta(act[y], y) -= w;
  }
  return SymMatrix::from_matrix(delta, 1e-9);
}

}  // namespace

LaplacianGap regular_laplacian_gap(const FiniteGroup& g,
                                   const std::vector<std::uint32_t>& s,
                                   std::uint64_t seed, std::size_t max_iterations) {
  if (s.empty()) throw input_error("regular_laplacian_gap: empty generating set");
  for (std::uint32_t si : s) {
    const std::uint32_t inv = g.inverse_of(si);
    if (std::find(s.begin(), s.end(), inv) == s.end())
      throw input_error("regular_laplacian_gap: set is not symmetric");
  }

  LaplacianGap out;
  if (g.size() <= kDenseLimit) {
    const Spectrum spec = linalg::sym_eigen(dense_laplacian(g, s), false);
    out.method = GapMethod::dense_eigen;
    for (double lam : spec.values)
      if (lam > 1e-8) {
        out.gap = lam;
        break;
      }
    return out;
  }

  // Power iteration for the top eigenvalue of the averaging operator
  // (1/|S|) sum pi(s) on the complement of the constants.
  std::vector<std::vector<std::uint32_t>> tables;
  tables.reserve(s.size());
  for (std::uint32_t si : s) tables.push_back(g.left_action(si));
  const std::vector<double> weights(s.size(), 1.0 / static_cast<double>(s.size()));

  const walks_detail::PowerResult pr = walks_detail::top_eigenvalue_deflated(
      tables, weights, g.size(), seed, max_iterations, 1e-10);
  out.method = GapMethod::power_iteration;
  out.gap = 1.0 - pr.rayleigh;
  out.iterations = pr.iterations;
  out.residual = pr.residual;
  return out;
}

subspaces::AngleResult fixed_space_angle(const FiniteGroup& g,
                                         const std::vector<std::uint32_t>& h1,
                                         const std::vector<std::uint32_t>& h2) {
  if (!is_subgroup(g, h1) || !is_subgroup(g, h2))
    throw input_error("fixed_space_angle: inputs are not subgroups");

  const std::size_t n = g.size();
  auto fixed_space = [&](const std::vector<std::uint32_t>& h) {
    // Orbits of x -> h x are the right cosets; the fixed space of the left
    // regular action of H is spanned by their normalized indicators.
    std::vector<std::uint32_t> orbit_of(n, UINT32_MAX);
    std::vector<std::vector<std::uint32_t>> orbits;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (orbit_of[x] != UINT32_MAX) continue;
      const auto id = static_cast<std::uint32_t>(orbits.size());
      orbits.emplace_back();
      for (std::uint32_t h_el : h) {
        const std::uint32_t y = g.multiply(h_el, x);
        if (orbit_of[y] == UINT32_MAX) {
          orbit_of[y] = id;
          orbits.back().push_back(y);
        }
      }
    }
    Matrix basis(orbits.size(), n);
    for (std::size_t r = 0; r < orbits.size(); ++r) {
      const double v = 1.0 / std::sqrt(static_cast<double>(orbits[r].size()));
      for (std::uint32_t x : orbits[r]) basis(r, x) = v;
    }
    return subspaces::Subspace{n, std::move(basis)};
  };

  return subspaces::friedrichs_angle(fixed_space(h1), fixed_space(h2));
}

double observation_bound(const certificates::AngleMatrix& pair_bounds,
                         double per_subgroup_displacement) {
  const certificates::Certificate cert = certificates::build_certificate(pair_bounds);
  if (cert.status != linalg::PdStatus::positive_definite)
    throw certificate_error("observation_bound: pair-bound matrix is not pd");
  return per_subgroup_displacement *
         std::sqrt(cert.lambda_min / static_cast<double>(pair_bounds.size()));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

SteinbergCertificate steinberg_certificate(std::size_t n, std::uint64_t p) {
  if (n < 3) throw input_error("steinberg_certificate: needs n >= 3");
  if (!is_prime(p)) throw input_error("steinberg_certificate: p must be prime");

  const double eps = 1.0 / std::sqrt(static_cast<double>(p));
  certificates::AngleMatrix am(n);
  for (std::size_t i = 0; i < n; ++i) am.set_eps(i, (i + 1) % n, eps);

  SteinbergCertificate out;
  out.epsilon = eps;
  out.certificate = certificates::build_certificate(am);
  out.floor_bound = std::sqrt(1.0 / (5.0 * static_cast<double>(n)));

  const double target = 1.0 - 2.0 * eps;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += am.matrix()(i, j);
    res += (row - target) * (row - target);
  }
  out.all_ones_residual = std::sqrt(res);

  if (out.certificate.status == linalg::PdStatus::positive_definite)
    out.kazhdan_bound = observation_bound(am);
  return out;
}

KacMoodyCertificate kac_moody_certificate(const std::vector<std::vector<int>>& adjacency,
                                          std::uint64_t p) {
  const std::size_t n = adjacency.size();
  if (n < 2) throw input_error("kac_moody_certificate: graph too small");
  if (!is_prime(p)) throw input_error("kac_moody_certificate: p must be prime");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n) throw input_error("kac_moody_certificate: ragged graph");
    if (adjacency[i][i] != 0) throw input_error("kac_moody_certificate: loops not allowed");
    for (std::size_t j = 0; j < n; ++j) {
      if (adjacency[i][j] != 0 && adjacency[i][j] != 1)
        throw input_error("kac_moody_certificate: adjacency must be 0/1");
      if (adjacency[i][j] != adjacency[j][i])
        throw input_error("kac_moody_certificate: graph must be undirected");
    }
  }

  KacMoodyCertificate out;
  out.epsilon = 1.0 / std::sqrt(static_cast<double>(p));
  certificates::AngleMatrix am(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adjacency[i][j]) am.set_eps(i, j, out.epsilon);
  out.certificate = certificates::build_certificate(am);

  std::size_t deg0 = 0;
  for (std::size_t j = 0; j < n; ++j) deg0 += static_cast<std::size_t>(adjacency[0][j]);
  out.regular = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j) deg += static_cast<std::size_t>(adjacency[i][j]);
    if (deg != deg0) out.regular = false;
  }
  out.degree = deg0;
  if (out.regular)
    out.predicted_lambda_min = 1.0 - static_cast<double>(deg0) * out.epsilon;
  return out;
}

GroupWithSubgroups preset_sym(std::size_t k) {
  if (k < 2) throw input_error("preset_sym: needs k >= 2");
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Permutation t;
    t.img.resize(k);
    for (std::uint32_t j = 0; j < k; ++j) t.img[j] = j;
    std::swap(t.img[i], t.img[i + 1]);
    gens.push_back(t);
  }
  GroupWithSubgroups out{enumerate_group(gens, 1u << 24), {}};
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.subgroups.push_back(subgroup_closure(out.group, {out.group.generator(i)}));
  return out;
}

GroupWithSubgroups preset_dihedral(std::size_t m) {
  if (m < 2) throw input_error("preset_dihedral: needs m >= 2");
  const double theta = std::numbers::pi / static_cast<double>(m);
  MatrixReal a{2, {1.0, 0.0, 0.0, -1.0}};  // reflection across the x-axis
  MatrixReal b{2,
               {std::cos(2.0 * theta), std::sin(2.0 * theta), std::sin(2.0 * theta),
                -std::cos(2.0 * theta)}};  // reflection across the line at pi/m
  GroupWithSubgroups out{enumerate_group({a, b}, 4 * m + 8), {}};
  for (std::size_t i = 0; i < 2; ++i)
    out.subgroups.push_back(subgroup_closure(out.group, {out.group.generator(i)}));
  return out;
}

GroupWithSubgroups preset_heisenberg(std::uint32_t p) {
  if (!is_prime(p)) throw input_error("preset_heisenberg: p must be prime");
  MatrixModP x{3, p, {1, 1, 0, 0, 1, 0, 0, 0, 1}};
  MatrixModP y{3, p, {1, 0, 0, 0, 1, 1, 0, 0, 1}};
  GroupWithSubgroups out{
      enumerate_group({x, y}, static_cast<std::uint64_t>(p) * p * p + 1), {}};
  for (std::size_t i = 0; i < 2; ++i)
    out.subgroups.push_back(subgroup_closure(out.group, {out.group.generator(i)}));
  return out;
}

GroupWithSubgroups preset_sl(std::size_t n, std::uint32_t p, char variant,
                             std::uint64_t cap) {
  if (n < 3) throw input_error("preset_sl: needs n >= 3");
  if (!is_prime(p)) throw input_error("preset_sl: p must be prime");

  auto root_subgroup_gens = [&](std::size_t i, std::size_t j) {
    std::vector<GroupElement> elems;  // all nonidentity elements of G_{i,j}
    for (std::uint32_t a = 1; a < p; ++a) {
      MatrixModP m{static_cast<std::uint32_t>(n), p,
                   std::vector<std::uint8_t>(n * n, 0)};
      for (std::size_t d = 0; d < n; ++d) m.a[d * n + d] = 1;
      m.a[i * n + j] = static_cast<std::uint8_t>(a);
      elems.push_back(m);
    }
    return elems;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (variant == 'a') {
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  } else if (variant == 'b') {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) pairs.emplace_back(i, j);
  } else if (variant == 'c') {
    for (std::size_t i = 0; i < n; ++i) {
      pairs.emplace_back(i, (i + 1) % n);
      pairs.emplace_back((i + 1) % n, i);
    }
  } else {
    throw input_error("preset_sl: variant must be a, b or c");
  }

  std::vector<GroupElement> gens;
  std::vector<std::vector<GroupElement>> subgroup_elems;
  for (auto [i, j] : pairs) {
    auto elems = root_subgroup_gens(i, j);
    gens.insert(gens.end(), elems.begin(), elems.end());
    subgroup_elems.push_back(std::move(elems));
  }

  GroupWithSubgroups out{enumerate_group(gens, cap), {}};
  if (variant == 'c') {
    // One plain element set: Id +/- e_ij over the adjacent pairs.
    std::vector<std::uint32_t> set;
    for (auto [i, j] : pairs) {
      MatrixModP plus{static_cast<std::uint32_t>(n), p,
                      std::vector<std::uint8_t>(n * n, 0)};
      for (std::size_t d = 0; d < n; ++d) plus.a[d * n + d] = 1;
      plus.a[i * n + j] = 1;
      MatrixModP minus = plus;
      minus.a[i * n + j] = static_cast<std::uint8_t>(p - 1);
      set.push_back(out.group.index_of(plus));
      set.push_back(out.group.index_of(minus));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    out.subgroups.push_back(std::move(set));
  } else {
    for (const auto& elems : subgroup_elems) {
      std::vector<std::uint32_t> sub{0};
      for (const GroupElement& e : elems) sub.push_back(out.group.index_of(e));
      std::sort(sub.begin(), sub.end());
      out.subgroups.push_back(std::move(sub));
    }
  }
  return out;
}

GroupWithSubgroups from_real_matrices(const std::vector<Matrix>& generators,
                                      std::uint64_t cap) {
  if (generators.empty()) throw input_error("from_real_matrices: no generators");
  std::vector<GroupElement> gens;
  for (const Matrix& g : generators) {
    if (g.rows() != g.cols()) throw input_error("from_real_matrices: not square");
    MatrixReal m{g.rows(), {g.data().begin(), g.data().end()}};
    gens.push_back(std::move(m));
  }
  GroupWithSubgroups out{enumerate_group(gens, cap), {}};
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.subgroups.push_back(subgroup_closure(out.group, {out.group.generator(i)}));
  return out;
}

}  // namespace kk::groups
