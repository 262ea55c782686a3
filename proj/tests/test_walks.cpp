#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kk/errors.hpp"
#include "kk/kernels.hpp"
#include "kk/walks.hpp"

using namespace kk;
using namespace kk::walks;
using std::numbers::pi;

TEST_CASE("sl_certificate: bounds, floors, and parameter validation") {
  const SlCertificate a = sl_certificate(3, 5, 'a');
  CHECK(a.bound == doctest::Approx((1.0 - 2.0 / std::sqrt(5.0)) / 3.0).epsilon(1e-12));
  CHECK(a.bound == doctest::Approx(0.035191).epsilon(1e-4));
  CHECK(a.floor == doctest::Approx(1.0 / 30.0));
  CHECK(a.bound > a.floor);

  const SlCertificate b = sl_certificate(3, 5, 'b');
  CHECK(b.bound == a.bound);

  const SlCertificate c = sl_certificate(3, 5, 'c');
  CHECK(c.bound == doctest::Approx(a.bound / 20.0));
  CHECK(c.floor == doctest::Approx(1.0 / 600.0));

  CHECK_THROWS_AS(sl_certificate(2, 5, 'a'), input_error);
  CHECK_THROWS_AS(sl_certificate(4, 25, 'a'), input_error);  // p must be prime
  CHECK_THROWS_AS(sl_certificate(3, 3, 'a'), input_error);
  CHECK_THROWS_AS(sl_certificate(3, 5, 'x'), input_error);
}

TEST_CASE("so_gap: small cases, Maslen comparison, asymptotics") {
  CHECK(so_gap(2, 'a').bound == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_FALSE(so_gap(2, 'a').maslen.has_value());

  const SoGap three = so_gap(3, 'b');
  CHECK(three.bound ==
        doctest::Approx((2.0 / 3.0) * std::pow(std::sin(pi / 8.0), 2)).epsilon(1e-9));
  CHECK(three.bound == doctest::Approx(0.097631).epsilon(1e-4));
  REQUIRE(three.maslen.has_value());
  CHECK(*three.maslen == doctest::Approx(0.25));

  // delta * n^3 -> pi^2 / 2
  const double n = 10000.0;
  CHECK(so_gap(10000, 'a').bound * n * n * n ==
        doctest::Approx(pi * pi / 2.0).epsilon(1e-3));

  CHECK_THROWS_AS(so_gap(1, 'a'), input_error);
}

TEST_CASE("harmonic2_check: equality with the closed form, no invariants") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const HarmonicCheck hc = harmonic2_check(n);
    CHECK(hc.dimension == (n + 1) * (n + 2) / 2 - 1);
    CHECK(hc.invariant_count == 0);
    CHECK(std::fabs(hc.gap - so_gap(n, 'a').bound) <= 1e-9);
  }
  CHECK_THROWS_AS(harmonic2_check(1), input_error);
  CHECK_THROWS_AS(harmonic2_check(13), input_error);
}

TEST_CASE("mixing_time: worked values and domain") {
  CHECK(mixing_time(0.5, 6.0, 0.25) ==
        doctest::Approx(2.0 * std::log(4.0 * std::sqrt(6.0))).epsilon(1e-12));
  CHECK(mixing_time(0.5, 6.0, 0.25) == doctest::Approx(4.5645).epsilon(1e-4));
  CHECK(mixing_time(1.0, 2.0, 0.25) ==
        doctest::Approx(std::log(4.0 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK_THROWS_AS(mixing_time(0.0, 6.0, 0.25), input_error);
  CHECK_THROWS_AS(mixing_time(-0.1, 6.0, 0.25), input_error);
}

TEST_CASE("empirical_gap: adjacent transpositions on Sym(4)") {
  WalkSpec spec;
  spec.family = WalkSpec::Family::coxeter;
  spec.type_label = "A";
  spec.rank_or_m = 3;
  spec.seed = 7;
  const GapEstimate est = empirical_gap(spec);
  const double want = (4.0 / 3.0) * std::pow(std::sin(pi / 8.0), 2);
  CHECK(est.group_order == 24);
  CHECK(std::fabs(est.empirical - want) <= 1e-6);
  CHECK(est.lower_certificate == doctest::Approx(want).epsilon(1e-12));
  CHECK_FALSE(est.flagged);
  CHECK(est.relaxation_time == doctest::Approx(1.0 / est.empirical));
}

TEST_CASE("empirical_gap: dihedral group of order 12") {
  WalkSpec spec;
  spec.family = WalkSpec::Family::coxeter;
  spec.type_label = "I2";
  spec.rank_or_m = 6;
  spec.seed = 3;
  const GapEstimate est = empirical_gap(spec);
  const double want = 2.0 * std::pow(std::sin(pi / 12.0), 2);
  CHECK(est.group_order == 12);
  CHECK(std::fabs(est.empirical - want) <= 1e-8);
  CHECK_FALSE(est.flagged);
}

TEST_CASE("empirical_gap: identical seeds give identical results, bit for bit") {
  WalkSpec spec;
  spec.family = WalkSpec::Family::coxeter;
  spec.type_label = "A";
  spec.rank_or_m = 3;
  spec.seed = 12345;
  const GapEstimate e1 = empirical_gap(spec);
  const GapEstimate e2 = empirical_gap(spec);
  CHECK(e1.empirical == e2.empirical);
  CHECK(e1.residual == e2.residual);
  CHECK(e1.iterations == e2.iterations);

  spec.seed = 54321;
  const GapEstimate e3 = empirical_gap(spec);
  CHECK(std::fabs(e3.empirical - e1.empirical) <= 1e-6);  // same operator after all
}

TEST_CASE("averaging operator is stochastic: constants map to constants") {
  const groups::GroupWithSubgroups gw = groups::preset_sym(4);
  const std::size_t n = gw.group.size();
  std::vector<double> ones(n, 1.0), out(n, 0.0);
  double total_weight = 0.0;
  for (const auto& sub : gw.subgroups) {
    const double w = 1.0 / (static_cast<double>(gw.subgroups.size()) *
                            static_cast<double>(sub.size() - 1));
    for (std::uint32_t e : sub) {
      if (e == 0) continue;
      const auto table = gw.group.left_action(e);
      kernels::gather_add(table, ones, out, w);
      total_weight += w;
    }
  }
  CHECK(total_weight == doctest::Approx(1.0).epsilon(1e-12));
  for (double v : out) CHECK(std::fabs(v - 1.0) <= 1e-12);
}
