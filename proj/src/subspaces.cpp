#include "kk/subspaces.hpp"

#include <algorithm>
#include <cmath>

#include "kk/errors.hpp"
#include "kk/kernels.hpp"
#include "kk/linalg.hpp"

namespace kk::subspaces {

namespace {

constexpr double kDropTol = 1e-9;

void check_vector(const Arrangement& arr, std::span<const double> v) {
  if (v.size() != arr.ambient_dim)
    throw input_error("vector dimension does not match the arrangement");
}

// One projection-removal pass of x against the rows of basis (first `count`).
void remove_components(const Matrix& basis, std::size_t count, std::vector<double>& x) {
  for (std::size_t r = 0; r < count; ++r) {
    auto row = basis.row(r);
    const double c = kernels::serial::dot(row, x);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * row[k];
  }
}

double norm(std::span<const double> x) { return kernels::serial::nrm2(x); }

// Appends the orthonormalized remainder of each candidate row to `out`
// (rows already in `out` are treated as an existing orthonormal set).
void gram_schmidt_extend(const Matrix& candidates, Matrix& out, std::size_t& out_rows) {
  const std::size_t d = out.cols();
  std::vector<double> w(d);
  for (std::size_t r = 0; r < candidates.rows(); ++r) {
    auto src = candidates.row(r);
    std::copy(src.begin(), src.end(), w.begin());
    const double orig = norm(w);
    if (orig == 0.0) continue;
    remove_components(out, out_rows, w);
    if (norm(w) < kDropTol * orig) continue;
    remove_components(out, out_rows, w);  // second pass tightens orthogonality
    const double nw = norm(w);
    if (nw < kDropTol * orig) continue;
    for (std::size_t k = 0; k < d; ++k) out(out_rows, k) = w[k] / nw;
    ++out_rows;
  }
}

Matrix shrink_rows(const Matrix& m, std::size_t rows) {
  Matrix r(rows, m.cols());
  for (std::size_t i = 0; i < rows; ++i)
    std::copy(m.row(i).begin(), m.row(i).end(), r.row(i).begin());
  return r;
}

struct ClusterSplit {
  double top = 0.0;            // sup below the cluster (0 if nothing below)
  std::size_t cluster = 0;     // multiplicity of the intersection cluster
  bool below_empty = true;
};

ClusterSplit split_spectrum(const Spectrum& spec, std::size_t n) {
  const double cut = static_cast<double>(n) * (1.0 - kClusterTol);
  ClusterSplit s;
  for (double lam : spec.values) {
    if (lam >= cut) {
      ++s.cluster;
    } else {
      s.top = std::max(s.top, lam);
      s.below_empty = false;
    }
  }
  return s;
}

}  // namespace

Subspace orthonormalize(const Matrix& vectors, std::size_t ambient_dim) {
  if (vectors.rows() > 0 && vectors.cols() != ambient_dim)
    throw input_error("orthonormalize: vectors do not live in the stated dimension");
  Matrix out(vectors.rows(), ambient_dim);
  std::size_t rank = 0;
  gram_schmidt_extend(vectors, out, rank);
  return Subspace{ambient_dim, shrink_rows(out, rank)};
}

Subspace from_rows(const std::vector<std::vector<double>>& rows, std::size_t ambient_dim) {
  Matrix m(rows.size(), ambient_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient_dim)
      throw input_error("from_rows: vector dimension mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return orthonormalize(m, ambient_dim);
}

std::vector<double> project(const Subspace& v, std::span<const double> x) {
  if (x.size() != v.ambient_dim) throw input_error("project: dimension mismatch");
  std::vector<double> p(v.ambient_dim, 0.0);
  for (std::size_t r = 0; r < v.rank(); ++r) {
    auto row = v.basis.row(r);
    const double c = kernels::serial::dot(row, x);
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += c * row[k];
  }
  return p;
}

double distance(const Subspace& v, std::span<const double> x) {
  const std::vector<double> p = project(v, x);
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dk = x[k] - p[k];
    s += dk * dk;
  }
  return std::sqrt(s);
}

SymMatrix sigma_gram(const Arrangement& arr) {
  if (arr.subspaces.empty()) throw input_error("sigma_gram: empty arrangement");
  for (const Subspace& s : arr.subspaces)
    if (s.ambient_dim != arr.ambient_dim)
      throw input_error("sigma_gram: mixed ambient dimensions");

  std::vector<std::size_t> offset(arr.count() + 1, 0);
  for (std::size_t i = 0; i < arr.count(); ++i)
    offset[i + 1] = offset[i] + arr.subspaces[i].rank();
  const std::size_t m = offset.back();

  SymMatrix gram(m);
  for (std::size_t i = 0; i < arr.count(); ++i) {
    const Matrix& bi = arr.subspaces[i].basis;
    for (std::size_t j = i; j < arr.count(); ++j) {
      const Matrix& bj = arr.subspaces[j].basis;
      for (std::size_t r = 0; r < bi.rows(); ++r)
        for (std::size_t s = 0; s < bj.rows(); ++s)
          gram.set(offset[i] + r, offset[j] + s,
                   kernels::serial::dot(bi.row(r), bj.row(s)));
    }
  }
  return gram;
}

Spectrum sigma_spectrum(const Arrangement& arr) {
  return linalg::sym_eigen(sigma_gram(arr), /*with_vectors=*/false);
}

namespace {

AngleResult angle_from_spectrum(const Spectrum& spec, std::size_t n) {
  const ClusterSplit split = split_spectrum(spec, n);
  AngleResult res;
  res.intersection_dim = split.cluster;
  res.spectrum_top = split.below_empty ? 0.0 : split.top;
  const double denom = static_cast<double>(n - 1);
  res.cosine = std::clamp((res.spectrum_top - 1.0) / denom, -1.0, 1.0);
  res.angle = std::acos(res.cosine);
  return res;
}

}  // namespace

AngleResult friedrichs_angle(const Subspace& v1, const Subspace& v2) {
  if (v1.rank() == 0 || v2.rank() == 0)
    throw input_error("friedrichs_angle: zero subspace");
  if (v1.ambient_dim != v2.ambient_dim)
    throw input_error("friedrichs_angle: mixed ambient dimensions");

  // Canonical argument order keeps the result exactly symmetric: the Jacobi
  // sweep is order-sensitive in the last bit.
  const auto before = [](const Subspace& a, const Subspace& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    const auto da = a.basis.data();
    const auto db = b.basis.data();
    return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
  };
  if (before(v2, v1)) return friedrichs_angle(v2, v1);

  Arrangement pair{v1.ambient_dim, {v1, v2}};
  const Spectrum spec = sigma_spectrum(pair);
  AngleResult res = angle_from_spectrum(spec, 2);

  // Degenerate conventions, pinned exactly by rank comparison.
  const std::size_t r0 = res.intersection_dim;
  if (r0 == v1.rank() && r0 == v2.rank()) {
    res.cosine = -1.0;
    res.angle = std::acos(-1.0);
  } else if (r0 == std::min(v1.rank(), v2.rank())) {
    res.cosine = 0.0;
    res.angle = std::acos(0.0);
  }
  return res;
}

AngleResult multi_angle(const Arrangement& arr) {
  if (arr.count() < 2) throw input_error("multi_angle: need at least two subspaces");
  for (const Subspace& s : arr.subspaces)
    if (s.rank() == 0) throw input_error("multi_angle: zero subspace");
  return angle_from_spectrum(sigma_spectrum(arr), arr.count());
}

Subspace orthocomplement(const Subspace& v) {
  const std::size_t d = v.ambient_dim;
  Matrix out(d, d);
  std::size_t rows = 0;
  gram_schmidt_extend(v.basis, out, rows);
  const std::size_t rank = rows;
  gram_schmidt_extend(Matrix::identity(d), out, rows);
  Matrix comp(rows - rank, d);
  for (std::size_t i = rank; i < rows; ++i)
    std::copy(out.row(i).begin(), out.row(i).end(), comp.row(i - rank).begin());
  return Subspace{d, std::move(comp)};
}

Subspace span_union(const Subspace& v1, const Subspace& v2) {
  if (v1.ambient_dim != v2.ambient_dim)
    throw input_error("span_union: mixed ambient dimensions");
  Matrix cat(v1.rank() + v2.rank(), v1.ambient_dim);
  for (std::size_t i = 0; i < v1.rank(); ++i)
    std::copy(v1.basis.row(i).begin(), v1.basis.row(i).end(), cat.row(i).begin());
  for (std::size_t i = 0; i < v2.rank(); ++i)
    std::copy(v2.basis.row(i).begin(), v2.basis.row(i).end(),
              cat.row(v1.rank() + i).begin());
  return orthonormalize(cat, v1.ambient_dim);
}

Analysis analyze(const Arrangement& arr) {
  if (arr.subspaces.empty()) throw input_error("analyze: empty arrangement");
  const std::size_t n = arr.count();
  const std::size_t d = arr.ambient_dim;

  const SymMatrix gram = sigma_gram(arr);
  const Spectrum spec = linalg::sym_eigen(gram, /*with_vectors=*/true);
  const double cut = static_cast<double>(n) * (1.0 - kClusterTol);

  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    offset[i + 1] = offset[i] + arr.subspaces[i].rank();

  Matrix candidates(spec.values.size(), d);
  std::size_t found = 0;
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    if (spec.values[k] < cut) continue;
    // Average the per-block reconstructions of the eigenvector.
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix& bi = arr.subspaces[i].basis;
      for (std::size_t r = 0; r < bi.rows(); ++r) {
        const double c = (*spec.vectors)(offset[i] + r, k) / static_cast<double>(n);
        auto row = bi.row(r);
        for (std::size_t t = 0; t < d; ++t) candidates(found, t) += c * row[t];
      }
    }
    ++found;
  }

  Subspace inter = orthonormalize(shrink_rows(candidates, found), d);
  for (std::size_t r = 0; r < inter.rank(); ++r) {
    for (const Subspace& s : arr.subspaces) {
      if (distance(s, inter.basis.row(r)) > 1e-9)
        throw input_error(
            "intersect: arrangement too close to degenerate for a reliable "
            "intersection basis");
    }
  }

  Analysis out;
  out.angle = n >= 2 ? angle_from_spectrum(spec, n)
                     : AngleResult{0.0, 1.0, spec.max(), inter.rank()};
  out.intersection = std::move(inter);
  return out;
}

Subspace intersect(const Arrangement& arr) { return analyze(arr).intersection; }

Distances distances(const Arrangement& arr, std::span<const double> v) {
  check_vector(arr, v);
  Distances d;
  d.to_subspaces.reserve(arr.count());
  for (const Subspace& s : arr.subspaces) d.to_subspaces.push_back(distance(s, v));
  d.to_intersection = distance(intersect(arr), v);
  return d;
}

double projection_to_intersection_bound(const Subspace& v1, const Subspace& v2,
                                        std::span<const double> v) {
  const AngleResult ar = friedrichs_angle(v1, v2);
  const double s = std::sin(ar.angle);
  if (ar.angle <= 0.0 || s <= 1e-12)
    throw input_error("projection_to_intersection_bound: angle must lie in (0, pi)");
  const double d1 = distance(v1, v);
  const double d2 = distance(v2, v);
  return (ar.cosine * d1 + d2) / s;
}

double codistance_to_cosine(double rho, std::size_t n) {
  if (n < 2) throw input_error("codistance_to_cosine: n must be at least 2");
  const double lo = 1.0 / static_cast<double>(n);
  if (rho < lo - 1e-12 || rho > 1.0 + 1e-12)
    throw input_error("codistance_to_cosine: rho out of [1/n, 1]");
  return (static_cast<double>(n) * rho - 1.0) / (static_cast<double>(n) - 1.0);
}

}  // namespace kk::subspaces
