#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kk/errors.hpp"
#include "kk/subspaces.hpp"
#include "oracles.hpp"

using namespace kk;
using namespace kk::subspaces;
using std::numbers::pi;

namespace {

Subspace axis(std::size_t dim, std::size_t k) {
  Matrix m(1, dim);
  m(0, k) = 1.0;
  return orthonormalize(m, dim);
}

Subspace coordinate_hyperplane(std::size_t dim, std::size_t k) {
  Matrix m(dim - 1, dim);
  std::size_t r = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    if (j == k) continue;
    m(r++, j) = 1.0;
  }
  return orthonormalize(m, dim);
}

Subspace line_at(double phi) {
  Matrix m(1, 2);
  m(0, 0) = std::cos(phi);
  m(0, 1) = std::sin(phi);
  return orthonormalize(m, 2);
}

Matrix rotation_about_z(double theta) {
  Matrix r = Matrix::identity(3);
  r(0, 0) = std::cos(theta);
  r(0, 1) = -std::sin(theta);
  r(1, 0) = std::sin(theta);
  r(1, 1) = std::cos(theta);
  return r;
}

Subspace transformed(const Subspace& v, const Matrix& q) {
  // rows b -> b Q^T, i.e. vectors x -> Q x
  Matrix m(v.rank(), v.ambient_dim);
  for (std::size_t r = 0; r < v.rank(); ++r)
    for (std::size_t i = 0; i < v.ambient_dim; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < v.ambient_dim; ++j) s += q(i, j) * v.basis(r, j);
      m(r, i) = s;
    }
  return orthonormalize(m, v.ambient_dim);
}

}  // namespace

TEST_CASE("orthonormalize: scaling, near-dependence, spans") {
  Matrix one(1, 3);
  one(0, 0) = 2.0;
  const Subspace s1 = orthonormalize(one, 3);
  REQUIRE(s1.rank() == 1);
  CHECK(s1.basis(0, 0) == doctest::Approx(1.0));
  CHECK(s1.basis(0, 1) == 0.0);

  Matrix dep(2, 2);
  dep(0, 0) = 1.0;
  dep(1, 0) = 1.0;
  dep(1, 1) = 1e-12;
  CHECK(orthonormalize(dep, 2).rank() == 1);

  Matrix plane(2, 3);
  plane(0, 0) = 1.0;
  plane(0, 1) = 1.0;
  plane(1, 0) = 1.0;
  plane(1, 1) = -1.0;
  const Subspace s2 = orthonormalize(plane, 3);
  REQUIRE(s2.rank() == 2);
  for (std::size_t r = 0; r < 2; ++r) CHECK(s2.basis(r, 2) == 0.0);
  const double ip = s2.basis(0, 0) * s2.basis(1, 0) + s2.basis(0, 1) * s2.basis(1, 1);
  CHECK(std::fabs(ip) < 1e-12);
}

TEST_CASE("orthonormalize: dimension mismatch") {
  CHECK_THROWS_AS(orthonormalize(Matrix(1, 2), 3), input_error);
}

TEST_CASE("sigma_spectrum: the three catalogued shapes") {
  // two identical lines -> {0, 2}
  Arrangement same{2, {line_at(0.4), line_at(0.4)}};
  auto spec = sigma_spectrum(same);
  REQUIRE(spec.values.size() == 2);
  CHECK(spec.values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec.values[1] == doctest::Approx(2.0).epsilon(1e-12));

  // line inside a plane in dim 3 -> {0, 1, 2}
  Subspace plane = coordinate_hyperplane(3, 2);  // z = 0
  Arrangement contained{3, {axis(3, 0), plane}};
  spec = sigma_spectrum(contained);
  REQUIRE(spec.values.size() == 3);
  CHECK(spec.values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.values[2] == doctest::Approx(2.0).epsilon(1e-12));

  // two lines at angle phi -> {1 - cos phi, 1 + cos phi}
  const double phi = 0.7;
  Arrangement lines{2, {line_at(0.0), line_at(phi)}};
  spec = sigma_spectrum(lines);
  CHECK(spec.values[0] == doctest::Approx(1.0 - std::cos(phi)).epsilon(1e-12));
  CHECK(spec.values[1] == doctest::Approx(1.0 + std::cos(phi)).epsilon(1e-12));
}

TEST_CASE("friedrichs_angle: orthogonal lines, lines at 0.3, equal planes") {
  CHECK(friedrichs_angle(axis(2, 0), axis(2, 1)).angle == doctest::Approx(pi / 2));

  const AngleResult r = friedrichs_angle(line_at(0.0), line_at(0.3));
  CHECK(r.angle == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(r.intersection_dim == 0);

  const Subspace p = coordinate_hyperplane(3, 2);
  const AngleResult req = friedrichs_angle(p, p);
  CHECK(req.angle == doctest::Approx(pi));
  CHECK(req.cosine == -1.0);
  CHECK(req.intersection_dim == 2);
}

TEST_CASE("friedrichs_angle: strict containment is pi/2; zero subspace rejected") {
  const AngleResult r = friedrichs_angle(axis(3, 0), coordinate_hyperplane(3, 2));
  CHECK(r.angle == doctest::Approx(pi / 2));
  CHECK(r.cosine == 0.0);
  CHECK(r.intersection_dim == 1);

  Subspace zero{3, Matrix(0, 3)};
  CHECK_THROWS_AS(friedrichs_angle(zero, axis(3, 0)), input_error);
}

TEST_CASE("multi_angle: coordinate lines and hyperplanes") {
  for (std::size_t n : {std::size_t{3}, std::size_t{4}, std::size_t{6}}) {
    Arrangement lines{n, {}};
    Arrangement planes{n, {}};
    for (std::size_t k = 0; k < n; ++k) {
      lines.subspaces.push_back(axis(n, k));
      planes.subspaces.push_back(coordinate_hyperplane(n, k));
    }
    CHECK(multi_angle(lines).angle == doctest::Approx(pi / 2).epsilon(1e-12));
    const double want = 1.0 - 1.0 / static_cast<double>(n - 1);
    CHECK(multi_angle(planes).cosine == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("multi_angle: three planes through a common axis pairwise at pi/3") {
  // Normals at mutual angle 2*pi/3 in the xy-plane; every pairwise Friedrichs
  // angle is pi/3 and the direct Sigma computation gives cos 1/4.
  Arrangement book{3, {}};
  for (int k = 0; k < 3; ++k) {
    Matrix normal(1, 3);
    normal(0, 0) = std::cos(2.0 * pi * k / 3.0);
    normal(0, 1) = std::sin(2.0 * pi * k / 3.0);
    book.subspaces.push_back(orthocomplement(orthonormalize(normal, 3)));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(friedrichs_angle(book.subspaces[i], book.subspaces[j]).angle ==
            doctest::Approx(pi / 3).epsilon(1e-12));
  const AngleResult r = multi_angle(book);
  CHECK(r.cosine == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.intersection_dim == 1);
}

TEST_CASE("orthocomplement: axis, full space, random double complement") {
  const Subspace yz = orthocomplement(axis(3, 0));
  REQUIRE(yz.rank() == 2);
  for (std::size_t r = 0; r < 2; ++r) CHECK(std::fabs(yz.basis(r, 0)) < 1e-14);

  Matrix full = Matrix::identity(4);
  CHECK(orthocomplement(orthonormalize(full, 4)).rank() == 0);

  std::mt19937_64 rng(12);
  const Subspace v = oracles::random_subspace(7, 3, rng);
  const Subspace comp = orthocomplement(v);
  REQUIRE(comp.rank() == 4);
  const Subspace again = orthocomplement(comp);
  // projector comparison ||P_V - P_{(V^perp)^perp}||_max <= 1e-9
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      double p1 = 0.0, p2 = 0.0;
      for (std::size_t r = 0; r < 3; ++r) p1 += v.basis(r, i) * v.basis(r, j);
      for (std::size_t r = 0; r < 3; ++r) p2 += again.basis(r, i) * again.basis(r, j);
      CHECK(std::fabs(p1 - p2) <= 1e-9);
    }
}

TEST_CASE("intersect: planes, hyperplanes, rotated planes about an axis") {
  // z=0 and y=0 meet in the x-axis
  Arrangement two{3, {coordinate_hyperplane(3, 2), coordinate_hyperplane(3, 1)}};
  const Subspace line = intersect(two);
  REQUIRE(line.rank() == 1);
  CHECK(std::fabs(std::fabs(line.basis(0, 0)) - 1.0) < 1e-10);

  Arrangement hyper{4, {}};
  for (std::size_t k = 0; k < 4; ++k)
    hyper.subspaces.push_back(coordinate_hyperplane(4, k));
  CHECK(intersect(hyper).rank() == 0);

  // three rotations of the xz-plane about the z-axis share exactly the z-axis
  Matrix xz(2, 3);
  xz(0, 0) = 1.0;
  xz(1, 2) = 1.0;
  const Subspace base = orthonormalize(xz, 3);
  Arrangement rotations{3, {}};
  for (double theta : {0.0, 0.9, 2.1})
    rotations.subspaces.push_back(transformed(base, rotation_about_z(theta)));
  const Subspace zline = intersect(rotations);
  REQUIRE(zline.rank() == 1);
  CHECK(std::fabs(std::fabs(zline.basis(0, 2)) - 1.0) < 1e-10);
}

TEST_CASE("distances: intersection point, Pythagorean pair, dimension check") {
  Arrangement axes{2, {axis(2, 0), axis(2, 1)}};
  const Distances d = distances(axes, std::vector<double>{3.0, 4.0});
  CHECK(d.to_subspaces[0] == doctest::Approx(4.0));
  CHECK(d.to_subspaces[1] == doctest::Approx(3.0));
  CHECK(d.to_intersection == doctest::Approx(5.0));

  Arrangement planes{3, {coordinate_hyperplane(3, 2), coordinate_hyperplane(3, 1)}};
  const Distances dz = distances(planes, std::vector<double>{2.5, 0.0, 0.0});
  CHECK(dz.to_intersection == doctest::Approx(0.0));
  CHECK(dz.to_subspaces[0] == doctest::Approx(0.0));
  CHECK(dz.to_subspaces[1] == doctest::Approx(0.0));

  CHECK_THROWS_AS(distances(axes, std::vector<double>{1.0, 2.0, 3.0}), input_error);
}

TEST_CASE("projection_to_intersection_bound: examples and tightness") {
  // v in the intersection: bound 0
  Arrangement planes{3, {coordinate_hyperplane(3, 2), coordinate_hyperplane(3, 1)}};
  CHECK(projection_to_intersection_bound(planes.subspaces[0], planes.subspaces[1],
                                         std::vector<double>{1.0, 0.0, 0.0}) ==
        doctest::Approx(0.0));

  // perpendicular planes, d1 = 0.6, d2 = 0.8 -> bound 0.8
  const std::vector<double> v{0.0, 0.8, 0.6};  // z-dist 0.6 to z=0, y-dist 0.8 to y=0
  CHECK(distance(planes.subspaces[0], v) == doctest::Approx(0.6));
  CHECK(distance(planes.subspaces[1], v) == doctest::Approx(0.8));
  CHECK(projection_to_intersection_bound(planes.subspaces[0], planes.subspaces[1], v) ==
        doctest::Approx(0.8));

  // equality for a vector in the wedge of the two normals
  const double alpha = 0.7;
  Matrix m2(2, 3);
  m2(0, 0) = 1.0;                 // x-axis
  m2(1, 1) = std::cos(alpha);     // second direction in the yz-plane
  m2(1, 2) = std::sin(alpha);
  const Subspace v1 = coordinate_hyperplane(3, 2);  // z = 0
  const Subspace v2 = orthonormalize(m2, 3);
  const std::vector<double> w{0.0, 3.0, 1.0};
  const double bound = projection_to_intersection_bound(v1, v2, w);
  // w1 = (0,3,0), w0 = P_{x-axis} w = 0, so the measured distance is 3
  CHECK(bound == doctest::Approx(3.0).epsilon(1e-9));

  // angle 0 is out of domain
  CHECK_THROWS_AS(
      projection_to_intersection_bound(v1, v1, std::vector<double>{0.0, 0.0, 1.0}),
      input_error);
}

TEST_CASE("codistance_to_cosine") {
  CHECK(codistance_to_cosine(1.0 / 4.0, 4) == doctest::Approx(0.0));
  CHECK(codistance_to_cosine(1.0, 4) == doctest::Approx(1.0));
  CHECK(codistance_to_cosine(2.0 / 3.0, 3) == doctest::Approx(0.5));
  CHECK_THROWS_AS(codistance_to_cosine(0.1, 3), input_error);
  CHECK_THROWS_AS(codistance_to_cosine(1.1, 3), input_error);
}

// ---------------------------------------------------------------------------
// Property tests
// ---------------------------------------------------------------------------

TEST_CASE("property: friedrichs_angle is symmetric, exactly") {
  std::mt19937_64 rng(100);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t dim = 2 + rep % 8;
    std::uniform_int_distribution<std::size_t> pick(1, dim - 1);
    const Subspace a = oracles::random_subspace(dim, pick(rng), rng);
    const Subspace b = oracles::random_subspace(dim, pick(rng), rng);
    CHECK(friedrichs_angle(a, b).angle == friedrichs_angle(b, a).angle);
  }
}

TEST_CASE("property: orthogonal invariance of pair and multi angles") {
  std::mt19937_64 rng(300);
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t dim = 3 + rep % 6;
    std::uniform_int_distribution<std::size_t> pick(1, dim - 1);
    Arrangement arr{dim, {}};
    const std::size_t n = 2 + rep % 3;
    for (std::size_t i = 0; i < n; ++i)
      arr.subspaces.push_back(oracles::random_subspace(dim, pick(rng), rng));

    const Matrix q = oracles::random_orthogonal(dim, rng);
    Arrangement moved{dim, {}};
    for (const Subspace& s : arr.subspaces) moved.subspaces.push_back(transformed(s, q));

    CHECK(std::fabs(multi_angle(arr).angle - multi_angle(moved).angle) <= 1e-9);
    CHECK(std::fabs(friedrichs_angle(arr.subspaces[0], arr.subspaces[1]).angle -
                    friedrichs_angle(moved.subspaces[0], moved.subspaces[1]).angle) <=
          1e-9);
  }
}

TEST_CASE("property: pair angle matches the SVD principal-angle oracle") {
  std::mt19937_64 rng(411);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t dim = 2 + rep % 10;
    std::uniform_int_distribution<std::size_t> pick(1, dim);
    const Subspace a = oracles::random_subspace(dim, pick(rng), rng);
    const Subspace b = oracles::random_subspace(dim, pick(rng), rng);
    const AngleResult r = friedrichs_angle(a, b);
    if (r.cosine < 0.0) continue;  // equal subspaces: convention pi
    CHECK(r.cosine == doctest::Approx(oracles::friedrichs_cos_by_svd(a, b)).epsilon(1e-8));
  }
}

TEST_CASE("property: orthocomplement invariance of the pair angle") {
  std::mt19937_64 rng(500);
  int tested = 0;
  while (tested < 150) {
    const std::size_t dim = 2 + static_cast<std::size_t>(rng() % 11);  // up to 12
    std::uniform_int_distribution<std::size_t> pick(1, dim - 1);
    const Subspace a = oracles::random_subspace(dim, pick(rng), rng);
    const Subspace b = oracles::random_subspace(dim, pick(rng), rng);
    const double direct = friedrichs_angle(a, b).angle;
    const double comp = friedrichs_angle(orthocomplement(a), orthocomplement(b)).angle;
    CHECK(std::fabs(direct - comp) <= 1e-8);
    ++tested;
  }
}

TEST_CASE("property: Sigma spectrum symmetry about 1 and range [0, 2] for pairs") {
  std::mt19937_64 rng(600);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t dim = 2 + rep % 9;
    std::uniform_int_distribution<std::size_t> pick(1, dim);
    Arrangement pair{dim,
                     {oracles::random_subspace(dim, pick(rng), rng),
                      oracles::random_subspace(dim, pick(rng), rng)}};
    const Spectrum spec = sigma_spectrum(pair);
    const std::size_t m = spec.values.size();
    for (std::size_t k = 0; k < m; ++k) {
      CHECK(spec.values[k] >= -1e-9);
      CHECK(spec.values[k] <= 2.0 + 1e-9);
      CHECK(spec.values[k] + spec.values[m - 1 - k] == doctest::Approx(2.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: Sigma range [0, n] and intersection multiplicity") {
  std::mt19937_64 rng(700);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t dim = 4 + rep % 5;
    const std::size_t n = 2 + rep % 3;
    std::uniform_int_distribution<std::size_t> pick(2, dim - 1);
    Arrangement arr{dim, {}};
    for (std::size_t i = 0; i < n; ++i)
      arr.subspaces.push_back(oracles::random_subspace(dim, pick(rng), rng));

    const Spectrum spec = sigma_spectrum(arr);
    for (double lam : spec.values) {
      CHECK(lam >= -1e-9);
      CHECK(lam <= static_cast<double>(n) + 1e-9);
    }
    const std::size_t cluster = multi_angle(arr).intersection_dim;
    CHECK(cluster == intersect(arr).rank());
  }
}

TEST_CASE("property: weak and matrix distance estimates on random pairs") {
  std::mt19937_64 rng(800);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int rep = 0; rep < 120; ++rep) {
    const std::size_t dim = 2 + rep % 9;
    std::uniform_int_distribution<std::size_t> pick(1, dim);
    const Subspace v1 = oracles::random_subspace(dim, pick(rng), rng);
    const Subspace v2 = oracles::random_subspace(dim, pick(rng), rng);
    const AngleResult ar = friedrichs_angle(v1, v2);
    if (ar.cosine >= 1.0 - 1e-9 || ar.cosine < 0.0) continue;
    const double eps = ar.cosine;

    std::vector<double> w(dim);
    for (double& x : w) x = unit(rng);

    Arrangement arr{dim, {v1, v2}};
    const Distances d = distances(arr, w);
    const double d0 = d.to_intersection, d1 = d.to_subspaces[0], d2 = d.to_subspaces[1];

    // weak estimate
    CHECK(d0 * d0 <= (d1 * d1 + d2 * d2) / (1.0 - eps) + 1e-9);

    // matrix estimate, part (a)
    const double qa = (d1 * d1 + 2.0 * eps * d1 * d2 + d2 * d2) / (1.0 - eps * eps);
    CHECK(d0 * d0 <= qa + 1e-9);

    // matrix estimate, part (b) on projection norms
    const Subspace sum = span_union(v1, v2);
    const auto nrm = [&](const std::vector<double>& x) {
      double s = 0.0;
      for (double xi : x) s += xi * xi;
      return std::sqrt(s);
    };
    const double w12 = nrm(project(sum, w));
    const double w1 = nrm(project(v1, w));
    const double w2 = nrm(project(v2, w));
    const double qb = (w1 * w1 + 2.0 * eps * w1 * w2 + w2 * w2) / (1.0 - eps * eps);
    CHECK(w12 * w12 <= qb + 1e-9);

    // projection-to-intersection bound dominates the measured distance
    const std::vector<double> pw = project(v1, w);
    const std::vector<double> p0 = project(intersect(arr), w);
    std::vector<double> diff(dim);
    for (std::size_t i = 0; i < dim; ++i) diff[i] = pw[i] - p0[i];
    if (ar.angle > 1e-6 && ar.angle < pi - 1e-6)
      CHECK(projection_to_intersection_bound(v1, v2, w) >= nrm(diff) - 1e-9);
  }
}

TEST_CASE("property: degenerate limit identities for equal subspaces") {
  std::mt19937_64 rng(900);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 3 + rep % 5;
    const Subspace v = oracles::random_subspace(dim, 1 + rep % (dim - 1), rng);
    Arrangement arr{dim, {v, v}};
    std::vector<double> w(dim);
    for (double& x : w) x = unit(rng);
    const Distances d = distances(arr, w);
    CHECK(std::fabs(d.to_intersection - d.to_subspaces[0]) <= 1e-12);
    CHECK(std::fabs(d.to_intersection - d.to_subspaces[1]) <= 1e-12);
  }
}

TEST_CASE("property: multi-angle distance bound on random arrangements") {
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t dim = 3 + rep % 6;
    const std::size_t n = 2 + rep % 3;
    std::uniform_int_distribution<std::size_t> pick(1, dim - 1);
    Arrangement arr{dim, {}};
    for (std::size_t i = 0; i < n; ++i)
      arr.subspaces.push_back(oracles::random_subspace(dim, pick(rng), rng));
    const AngleResult ma = multi_angle(arr);
    if (ma.cosine >= 1.0 - 1e-9) continue;
    const double c = 1.0 / ((static_cast<double>(n) - 1.0) * (1.0 - ma.cosine));
    for (int rv = 0; rv < 4; ++rv) {
      std::vector<double> w(dim);
      for (double& x : w) x = unit(rng);
      const Distances d = distances(arr, w);
      double sum = 0.0;
      for (double di : d.to_subspaces) sum += di * di;
      CHECK(d.to_intersection * d.to_intersection <= c * sum + 1e-9);
    }
  }
}
