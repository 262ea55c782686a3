#include "kk/coxeter.hpp"

#include <cmath>
#include <numbers>

#include "kk/errors.hpp"
#include "kk/linalg.hpp"

namespace kk::coxeter {

namespace {

using std::numbers::pi;

std::vector<std::vector<int>> blank_matrix(std::size_t n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_bond(std::vector<std::vector<int>>& m, std::size_t i, std::size_t j, int v) {
  m[i][j] = v;
  m[j][i] = v;
}

void validate(const CoxeterSystem& sys) {
  if (sys.rank == 0 || sys.m.size() != sys.rank)
    throw input_error("CoxeterSystem: bad rank");
  for (std::size_t i = 0; i < sys.rank; ++i) {
    if (sys.m[i].size() != sys.rank) throw input_error("CoxeterSystem: ragged matrix");
    if (sys.m[i][i] != 1) throw input_error("CoxeterSystem: diagonal must be 1");
    for (std::size_t j = i + 1; j < sys.rank; ++j) {
      if (sys.m[i][j] != sys.m[j][i]) throw input_error("CoxeterSystem: not symmetric");
      if (sys.m[i][j] != 0 && sys.m[i][j] < 2)
        throw input_error("CoxeterSystem: off-diagonal orders must be >= 2 (0 = infinity)");
    }
  }
}

// Chain 0-1-...-(n-1) with the given bond orders between consecutive nodes.
std::vector<std::vector<int>> chain(std::size_t n, const std::vector<int>& bonds) {
  auto m = blank_matrix(n);
  for (std::size_t i = 0; i + 1 < n; ++i) set_bond(m, i, i + 1, bonds[i]);
  return m;
}

std::vector<std::vector<int>> simply_laced_chain(std::size_t n) {
  return chain(n, std::vector<int>(n ? n - 1 : 0, 3));
}

}  // namespace

CoxeterSystem catalogued_system(const std::string& type_label, std::size_t rank_or_m) {
  CoxeterSystem sys;
  const std::size_t n = rank_or_m;
  if (type_label == "A") {
    if (n < 1) throw input_error("type A needs rank >= 1");
    sys = {n, simply_laced_chain(n), "A"};
  } else if (type_label == "B") {
    if (n < 2) throw input_error("type B needs rank >= 2");
    std::vector<int> bonds(n - 1, 3);
    bonds[n - 2] = 4;
    sys = {n, chain(n, bonds), "B"};
  } else if (type_label == "D") {
    if (n < 4) throw input_error("type D needs rank >= 4");
    auto m = blank_matrix(n);
    for (std::size_t i = 0; i + 2 < n; ++i) set_bond(m, i, i + 1, 3);
    set_bond(m, n - 3, n - 1, 3);  // fork at the (n-3)rd node
    sys = {n, m, "D"};
  } else if (type_label == "E6" || type_label == "E7" || type_label == "E8") {
    const std::size_t r = type_label == "E6" ? 6 : (type_label == "E7" ? 7 : 8);
    if (rank_or_m != 0 && rank_or_m != r)
      throw input_error("exceptional type has a fixed rank");
    auto m = blank_matrix(r);
    for (std::size_t i = 0; i + 2 < r; ++i) set_bond(m, i, i + 1, 3);  // chain of r-1
    set_bond(m, 2, r - 1, 3);  // branch node attached to the third chain node
    sys = {r, m, type_label};
  } else if (type_label == "F4") {
    if (rank_or_m != 0 && rank_or_m != 4) throw input_error("F4 has rank 4");
    sys = {4, chain(4, {3, 4, 3}), "F4"};
  } else if (type_label == "H3") {
    if (rank_or_m != 0 && rank_or_m != 3) throw input_error("H3 has rank 3");
    sys = {3, chain(3, {5, 3}), "H3"};
  } else if (type_label == "H4") {
    if (rank_or_m != 0 && rank_or_m != 4) throw input_error("H4 has rank 4");
    sys = {4, chain(4, {5, 3, 3}), "H4"};
  } else if (type_label == "I2") {
    if (n < 2) throw input_error("I2(m) needs m >= 2");
    auto m = blank_matrix(2);
    set_bond(m, 0, 1, static_cast<int>(n));
    sys = {2, m, "I2"};
  } else {
    throw input_error("unknown Coxeter type label: " + type_label);
  }
  validate(sys);
  return sys;
}

CoxeterSystem custom_system(const std::vector<std::vector<int>>& m) {
  CoxeterSystem sys{m.size(), m, "custom"};
  validate(sys);
  return sys;
}

certificates::AngleMatrix cos_matrix(const CoxeterSystem& sys) {
  validate(sys);
  certificates::AngleMatrix am(sys.rank);
  for (std::size_t i = 0; i < sys.rank; ++i)
    for (std::size_t j = i + 1; j < sys.rank; ++j) {
      const int mij = sys.m[i][j];
      const double e = (mij == 0) ? 1.0 : std::cos(pi / static_cast<double>(mij));
      am.set_eps(i, j, e);
    }
  return am;
}

bool is_finite(const CoxeterSystem& sys) {
  return linalg::cholesky_pd(cos_matrix(sys).matrix()).is_pd();
}

double closed_form_coxeter_number(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank;
  if (sys.label == "A") return static_cast<double>(n + 1);
  if (sys.label == "B") return static_cast<double>(2 * n);
  if (sys.label == "D") return static_cast<double>(2 * (n - 1));
  if (sys.label == "E6") return 12.0;
  if (sys.label == "E7") return 18.0;
  if (sys.label == "E8") return 30.0;
  if (sys.label == "F4") return 12.0;
  if (sys.label == "H3") return 10.0;
  if (sys.label == "H4") return 30.0;
  if (sys.label == "I2") return static_cast<double>(sys.m[0][1]);
  throw input_error("no catalogued Coxeter number for label " + sys.label);
}

double closed_form_m(const CoxeterSystem& sys) {
  const double n = static_cast<double>(sys.rank);
  const double sqrt2 = std::sqrt(2.0);
  const double sqrt5 = std::sqrt(5.0);
  if (sys.label == "A") return n * (n + 1.0) * (n + 2.0) / 6.0;
  if (sys.label == "B")
    return n * (2.0 * n * n + 3.0 * (sqrt2 - 1.0) * n + 4.0 - 3.0 * sqrt2) / 3.0;
  if (sys.label == "D") return n * (n - 1.0) * (2.0 * n - 1.0) / 3.0;
  if (sys.label == "E6") return 156.0;
  if (sys.label == "E7") return 399.0;
  if (sys.label == "E8") return 1240.0;
  if (sys.label == "F4") return 56.0 + 36.0 * sqrt2;
  if (sys.label == "H3") return 31.0 + 12.0 * sqrt5;
  if (sys.label == "H4") return 332.0 + 144.0 * sqrt5;
  if (sys.label == "I2")
    return 2.0 / (1.0 - std::cos(pi / static_cast<double>(sys.m[0][1])));
  throw input_error("no catalogued M closed form for label " + sys.label);
}

std::size_t group_order(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank;
  auto factorial = [](std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  if (sys.label == "A") return factorial(n + 1);
  if (sys.label == "B") return (std::size_t{1} << n) * factorial(n);
  if (sys.label == "D") return (std::size_t{1} << (n - 1)) * factorial(n);
  if (sys.label == "E6") return 51840;
  if (sys.label == "E7") return 2903040;
  if (sys.label == "E8") return 696729600;
  if (sys.label == "F4") return 1152;
  if (sys.label == "H3") return 120;
  if (sys.label == "H4") return 14400;
  if (sys.label == "I2") return 2 * static_cast<std::size_t>(sys.m[0][1]);
  throw input_error("no catalogued order for label " + sys.label);
}

CoxeterReport coxeter_report(const CoxeterSystem& sys) {
  if (!is_finite(sys))
    throw certificate_error("coxeter_report: system is not finite");
  const certificates::AngleMatrix am = cos_matrix(sys);
  const double n = static_cast<double>(sys.rank);

  CoxeterReport rep;
  rep.lambda_min = linalg::sym_eigen(am.matrix(), /*with_vectors=*/false).min();
  rep.spectral_gap = 2.0 * rep.lambda_min / n;

  const std::vector<double> ones(sys.rank, 1.0);
  const std::vector<double> x = linalg::solve_spd(am.matrix(), ones);
  rep.m_value = 0.0;
  for (double xi : x) rep.m_value += xi;
  rep.kazhdan = 2.0 / std::sqrt(rep.m_value);

  if (sys.label == "custom") {
    // Invert lambda = 2 sin^2(pi / 2h).
    rep.coxeter_number = pi / (2.0 * std::asin(std::sqrt(rep.lambda_min / 2.0)));
  } else {
    rep.coxeter_number = closed_form_coxeter_number(sys);
  }
  return rep;
}

std::vector<Matrix> defining_representation(const CoxeterSystem& sys) {
  if (!is_finite(sys))
    throw certificate_error("defining_representation: system is not finite");
  const Matrix w = certificates::gram_realize(cos_matrix(sys));
  const std::size_t n = sys.rank;  // == w.cols() for a finite system

  std::vector<Matrix> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix s = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) -= 2.0 * w(i, r) * w(i, c);
    gens.push_back(std::move(s));
  }
  return gens;
}

Witness kazhdan_witness(const CoxeterSystem& sys) {
  if (!is_finite(sys))
    throw certificate_error("kazhdan_witness: system is not finite");
  const certificates::AngleMatrix am = cos_matrix(sys);
  const Matrix w = certificates::gram_realize(am);
  const std::size_t n = sys.rank;

  const std::vector<double> ones(n, 1.0);
  const std::vector<double> x = linalg::solve_spd(am.matrix(), ones);

  Witness wit;
  wit.vector.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) wit.vector[k] += x[i] * w(i, k);
  double nrm = 0.0;
  for (double v : wit.vector) nrm += v * v;
  nrm = std::sqrt(nrm);
  for (double& v : wit.vector) v /= nrm;

  // Each reflection moves v by 2 |<v, w_i>|; for this vector all n values
  // coincide at 2 M^{-1/2}.
  double eps0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ip = 0.0;
    for (std::size_t k = 0; k < n; ++k) ip += wit.vector[k] * w(i, k);
    eps0 = std::max(eps0, 2.0 * std::fabs(ip));
  }
  wit.epsilon0 = eps0;
  return wit;
}

std::vector<std::string> catalogued_labels() {
  return {"A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4", "I2"};
}

}  // namespace kk::coxeter
