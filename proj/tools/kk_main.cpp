// Command-line front end: angle reports, positive-definiteness certificates,
// Coxeter spectral data, Steinberg/Kac-Moody certificates and random-walk gap
// estimates, in machine-readable form.
//
// Exit codes: 0 success / certificate holds, 1 certificate fails, 2 input
// error. Every emitted number carries a provenance tag (closed_form |
// measured | certificate) so certificate floors are never mistaken for
// measured values. Long-running subcommands log progress to stderr only.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kk/certificates.hpp"
#include "kk/coxeter.hpp"
#include "kk/errors.hpp"
#include "kk/groups.hpp"
#include "kk/json_io.hpp"
#include "kk/kernels.hpp"
#include "kk/linalg.hpp"
#include "kk/subspaces.hpp"
#include "kk/walks.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCertificateFailed = 1;
constexpr int kExitInputError = 2;

std::string status_name(kk::linalg::PdStatus s) {
  switch (s) {
    case kk::linalg::PdStatus::positive_definite:
      return "positive_definite";
    case kk::linalg::PdStatus::boundary_singular:
      return "boundary_singular";
    case kk::linalg::PdStatus::indefinite:
      return "indefinite";
  }
  return "unknown";
}

// A report is an ordered list of fields; scalar fields carry provenance.
struct Report {
  ordered_json values = ordered_json::object();
  ordered_json provenance = ordered_json::object();

  void text(const std::string& key, const std::string& v) { values[key] = v; }
  void number(const std::string& key, double v, const std::string& prov) {
    values[key] = v;
    provenance[key] = prov;
  }
  void integer(const std::string& key, long long v, const std::string& prov) {
    values[key] = v;
    provenance[key] = prov;
  }
  void boolean(const std::string& key, bool v) { values[key] = v; }
  void null(const std::string& key) { values[key] = nullptr; }
};

void print_report(const Report& rep, const std::string& format) {
  if (format == "json") {
    ordered_json out = rep.values;
    out["provenance"] = rep.provenance;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "key,value,provenance\n";
    for (const auto& [key, val] : rep.values.items()) {
      const std::string prov =
          rep.provenance.contains(key) ? rep.provenance[key].get<std::string>() : "";
      std::cout << key << "," << (val.is_string() ? val.get<std::string>() : val.dump())
                << "," << prov << "\n";
    }
  } else {
    for (const auto& [key, val] : rep.values.items()) {
      std::cout << key << " = "
                << (val.is_string() ? val.get<std::string>() : val.dump());
      if (rep.provenance.contains(key))
        std::cout << "  [" << rep.provenance[key].get<std::string>() << "]";
      std::cout << "\n";
    }
  }
}

Report certificate_report(const kk::certificates::Certificate& cert) {
  Report rep;
  rep.text("status", status_name(cert.status));
  rep.number("lambda_min", cert.lambda_min, "measured");
  rep.number("angle_lower_bound_rad", cert.angle_lower_bound, "certificate");
  if (cert.m_value)
    rep.number("M", *cert.m_value, "measured");
  else
    rep.null("M");
  return rep;
}

int cmd_certify(const std::string& eps_path, const std::string& format) {
  const kk::certificates::AngleMatrix am = kk::json_io::load_eps(eps_path);
  const kk::certificates::Certificate cert = kk::certificates::build_certificate(am);
  print_report(certificate_report(cert), format);
  return cert.status == kk::linalg::PdStatus::positive_definite ? kExitOk
                                                                : kExitCertificateFailed;
}

int cmd_angle(const std::string& input_path, const std::string& format) {
  const kk::subspaces::Arrangement arr = kk::json_io::load_arrangement(input_path);
  const std::vector<std::string> names = kk::json_io::arrangement_names(input_path);

  Report rep;
  rep.integer("dim", static_cast<long long>(arr.ambient_dim), "measured");
  rep.integer("count", static_cast<long long>(arr.count()), "measured");
  if (arr.count() >= 2) {
    const kk::subspaces::AngleResult ma = kk::subspaces::multi_angle(arr);
    rep.number("multi_angle_rad", ma.angle, "measured");
    rep.number("multi_angle_cos", ma.cosine, "measured");
    rep.integer("intersection_dim", static_cast<long long>(ma.intersection_dim),
                "measured");
    ordered_json pairs = ordered_json::array();
    for (std::size_t i = 0; i < arr.count(); ++i)
      for (std::size_t j = i + 1; j < arr.count(); ++j) {
        const kk::subspaces::AngleResult pr =
            kk::subspaces::friedrichs_angle(arr.subspaces[i], arr.subspaces[j]);
        pairs.push_back({{"pair", names[i] + "|" + names[j]},
                         {"angle_rad", pr.angle},
                         {"cos", pr.cosine}});
      }
    rep.values["pairwise"] = pairs;
  }
  print_report(rep, format);
  return kExitOk;
}

void coxeter_csv_row(std::ostream& os, const kk::coxeter::CoxeterSystem& sys,
                     const kk::coxeter::CoxeterReport& rep) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%zu,%.17g,%.17g,%.17g,%.17g,%.17g", sys.label.c_str(),
                sys.rank, rep.coxeter_number, rep.lambda_min, rep.m_value, rep.kazhdan,
                rep.spectral_gap);
  os << buf << "\n";
}

constexpr const char* kCoxeterCsvHeader =
    "type,rank,coxeter_number,lambda_min,M,kazhdan_constant,spectral_gap";

int cmd_coxeter(const std::string& type, std::size_t rank, const std::string& m_file,
                const std::string& format) {
  const kk::coxeter::CoxeterSystem sys =
      m_file.empty() ? kk::coxeter::catalogued_system(type, rank)
                     : kk::json_io::load_coxeter(m_file);
  const kk::coxeter::CoxeterReport rep = kk::coxeter::coxeter_report(sys);

  if (format == "csv") {
    std::cout << kCoxeterCsvHeader << "\n";
    coxeter_csv_row(std::cout, sys, rep);
    return kExitOk;
  }
  Report r;
  r.text("type", sys.label);
  r.integer("rank", static_cast<long long>(sys.rank), "closed_form");
  r.number("coxeter_number", rep.coxeter_number,
           sys.label == "custom" ? "measured" : "closed_form");
  r.number("lambda_min", rep.lambda_min, "measured");
  r.number("M", rep.m_value, "measured");
  r.number("kazhdan_constant", rep.kazhdan, "measured");
  r.number("spectral_gap", rep.spectral_gap, "measured");
  print_report(r, format);
  return kExitOk;
}

int cmd_table1(std::size_t family_rank, std::size_t i2_bond, const std::string& format) {
  struct Row {
    std::string type;
    std::size_t rank;
  };
  const std::vector<Row> rows = {
      {"A", family_rank}, {"B", family_rank}, {"D", std::max<std::size_t>(family_rank, 4)},
      {"E6", 6},          {"E7", 7},          {"E8", 8},
      {"F4", 4},          {"H3", 3},          {"H4", 4},
      {"I2", i2_bond}};

  if (format == "csv") {
    std::cout << kCoxeterCsvHeader << "\n";
    for (const Row& row : rows) {
      const auto sys = kk::coxeter::catalogued_system(row.type, row.rank);
      coxeter_csv_row(std::cout, sys, kk::coxeter::coxeter_report(sys));
    }
    return kExitOk;
  }

  ordered_json out = ordered_json::array();
  for (const Row& row : rows) {
    const auto sys = kk::coxeter::catalogued_system(row.type, row.rank);
    const auto rep = kk::coxeter::coxeter_report(sys);
    ordered_json jr;
    jr["type"] = sys.label;
    jr["rank"] = sys.rank;
    jr["coxeter_number"] = rep.coxeter_number;
    jr["lambda_min"] = rep.lambda_min;
    jr["M"] = rep.m_value;
    jr["M_closed_form"] = kk::coxeter::closed_form_m(sys);
    jr["kazhdan_constant"] = rep.kazhdan;
    jr["spectral_gap"] = rep.spectral_gap;
    jr["provenance"] = {{"coxeter_number", "closed_form"},
                        {"lambda_min", "measured"},
                        {"M", "measured"},
                        {"M_closed_form", "closed_form"},
                        {"kazhdan_constant", "measured"},
                        {"spectral_gap", "measured"}};
    out.push_back(jr);
  }
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& jr : out)
      std::cout << jr["type"].get<std::string>() << jr["rank"]
                << ": h=" << jr["coxeter_number"] << " M=" << jr["M"]
                << " (closed form " << jr["M_closed_form"] << ")"
                << " kazhdan=" << jr["kazhdan_constant"] << " gap=" << jr["spectral_gap"]
                << "\n";
  }
  return kExitOk;
}

int cmd_steinberg(std::size_t n, std::uint64_t p, const std::string& format) {
  const kk::groups::SteinbergCertificate st = kk::groups::steinberg_certificate(n, p);
  Report rep;
  rep.text("status", status_name(st.certificate.status));
  rep.number("epsilon", st.epsilon, "closed_form");
  rep.number("lambda_min", st.certificate.lambda_min, "measured");
  rep.number("all_ones_residual", st.all_ones_residual, "measured");
  if (st.kazhdan_bound)
    rep.number("kazhdan_lower_bound", *st.kazhdan_bound, "certificate");
  else
    rep.null("kazhdan_lower_bound");
  rep.number("floor_bound", st.floor_bound, "certificate");
  print_report(rep, format);
  return st.certificate.status == kk::linalg::PdStatus::positive_definite
             ? kExitOk
             : kExitCertificateFailed;
}

int cmd_kacmoody(const std::string& graph_path, std::uint64_t p,
                 const std::string& format) {
  const auto adjacency = kk::json_io::load_graph(graph_path);
  const kk::groups::KacMoodyCertificate km =
      kk::groups::kac_moody_certificate(adjacency, p);
  Report rep;
  rep.text("status", status_name(km.certificate.status));
  rep.number("epsilon", km.epsilon, "closed_form");
  rep.number("lambda_min", km.certificate.lambda_min, "measured");
  rep.boolean("regular", km.regular);
  rep.integer("degree", static_cast<long long>(km.degree), "measured");
  if (km.predicted_lambda_min)
    rep.number("predicted_lambda_min", *km.predicted_lambda_min, "closed_form");
  else
    rep.null("predicted_lambda_min");
  print_report(rep, format);
  return km.certificate.status == kk::linalg::PdStatus::positive_definite
             ? kExitOk
             : kExitCertificateFailed;
}

int cmd_walk(const std::string& group, std::size_t n, std::uint64_t p, char variant,
             const std::string& type, std::size_t rank, std::size_t iters,
             std::uint64_t seed, const std::string& format) {
  kk::walks::WalkSpec spec;
  spec.seed = seed;
  spec.max_iterations = iters;
  if (group == "sl") {
    spec.family = kk::walks::WalkSpec::Family::sl;
    spec.n = n;
    spec.p = p;
    spec.variant = variant;
  } else if (group == "coxeter") {
    spec.family = kk::walks::WalkSpec::Family::coxeter;
    spec.type_label = type;
    spec.rank_or_m = rank;
  } else {
    throw kk::input_error("walk: --group must be sl or coxeter");
  }

  std::cerr << "walk: enumerating group and running power iteration (seed=" << seed
            << ", iters<=" << iters << ")\n";
  const kk::walks::GapEstimate est = kk::walks::empirical_gap(spec);
  std::cerr << "walk: done after " << est.iterations << " iterations on order "
            << est.group_order << "\n";

  Report rep;
  rep.number("certificate", est.lower_certificate, "certificate");
  rep.number("empirical", est.empirical, "measured");
  rep.number("residual", est.residual, "measured");
  rep.number("relaxation_time", est.relaxation_time, "measured");
  rep.number("mixing_time_bound", est.mixing_time_bound, "measured");
  rep.integer("seed", static_cast<long long>(est.seed), "closed_form");
  rep.integer("iterations", static_cast<long long>(est.iterations), "measured");
  rep.integer("group_order", static_cast<long long>(est.group_order), "measured");
  rep.boolean("converged", est.converged);
  rep.boolean("flagged", est.flagged);
  print_report(rep, format);
  return est.flagged ? kExitCertificateFailed : kExitOk;
}

int cmd_so(std::size_t n, char variant, bool check_harmonic, const std::string& format) {
  const kk::walks::SoGap gap = kk::walks::so_gap(n, variant);
  Report rep;
  rep.number("gap_bound", gap.bound, variant == 'a' ? "closed_form" : "certificate");
  if (gap.maslen)
    rep.number("maslen_exact", *gap.maslen, "closed_form");
  else
    rep.null("maslen_exact");
  if (check_harmonic) {
    const kk::walks::HarmonicCheck hc = kk::walks::harmonic2_check(n);
    rep.number("harmonic2_gap", hc.gap, "measured");
    rep.integer("harmonic2_dimension", static_cast<long long>(hc.dimension), "measured");
    rep.integer("harmonic2_invariants", static_cast<long long>(hc.invariant_count),
                "measured");
  }
  print_report(rep, format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  kk::kernels::apply_env_thread_cap();

  CLI::App app{"angle certificates and spectral gaps for subspace arrangements, "
               "Coxeter groups and random walks on finite groups"};
  app.require_subcommand(1);
  // Let --format/--seed appear after the subcommand as well.
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Random seed for iterative estimates")
      ->capture_default_str();

  auto* angle = app.add_subcommand("angle", "Angles of an arrangement file");
  std::string angle_input;
  angle->add_option("--input", angle_input, "Arrangement JSON file")->required();

  auto* certify = app.add_subcommand("certify", "Positive-definiteness certificate");
  std::string eps_path;
  certify->add_option("--eps", eps_path, "eps JSON file")->required();

  auto* coxeter = app.add_subcommand("coxeter", "Coxeter system report");
  std::string cox_type = "A";
  std::size_t cox_rank = 2;
  std::string cox_m_file;
  coxeter->add_option("--type", cox_type, "Type label (A,B,D,E6,E7,E8,F4,H3,H4,I2)");
  coxeter->add_option("--rank", cox_rank, "Rank (bond order m for I2)");
  coxeter->add_option("--m", cox_m_file, "Custom Coxeter matrix JSON file");

  auto* table1 = app.add_subcommand("table1", "Kazhdan data for the catalogued types");
  std::size_t family_rank = 8;
  std::size_t i2_bond = 12;
  table1->add_option("--rank", family_rank, "Rank for the A/B/D families")
      ->capture_default_str();
  table1->add_option("--i2", i2_bond, "Bond order for the I2 row")->capture_default_str();

  auto* steinberg = app.add_subcommand("steinberg", "Cyclic-pattern certificate");
  std::size_t st_n = 3;
  std::uint64_t st_p = 5;
  steinberg->add_option("--n", st_n, "Number of subgroups (>= 3)")->required();
  steinberg->add_option("--p", st_p, "Prime")->required();

  auto* kacmoody = app.add_subcommand("kacmoody", "Graph-pattern certificate");
  std::string graph_path;
  std::uint64_t km_p = 5;
  kacmoody->add_option("--graph", graph_path, "Graph JSON file")->required();
  kacmoody->add_option("--p", km_p, "Prime")->required();

  auto* walk = app.add_subcommand("walk", "Random-walk spectral gap estimate");
  std::string walk_group = "sl";
  std::size_t walk_n = 3;
  std::uint64_t walk_p = 5;
  std::string walk_set = "a";
  std::string walk_type = "A";
  std::size_t walk_rank = 3;
  std::size_t walk_iters = 20000;
  walk->add_option("--group", walk_group, "sl or coxeter")->capture_default_str();
  walk->add_option("--n", walk_n, "Matrix size for sl")->capture_default_str();
  walk->add_option("--p", walk_p, "Prime for sl")->capture_default_str();
  walk->add_option("--set", walk_set, "Generating set variant a|b|c")
      ->check(CLI::IsMember({"a", "b", "c"}))
      ->capture_default_str();
  walk->add_option("--type", walk_type, "Coxeter type for --group coxeter");
  walk->add_option("--rank", walk_rank, "Coxeter rank (bond order for I2)");
  walk->add_option("--iters", walk_iters, "Iteration budget")->capture_default_str();

  auto* so = app.add_subcommand("so", "Rotation-group walk bounds");
  std::size_t so_n = 2;
  std::string so_variant = "a";
  bool so_check = false;
  so->add_option("--n", so_n, "Parameter n (the walk lives on SO(n+1))")->required();
  so->add_option("--variant", so_variant, "a (adjacent circles) or b (all circles)")
      ->check(CLI::IsMember({"a", "b"}))
      ->capture_default_str();
  so->add_flag("--check-harmonic", so_check,
               "Also compute the harmonic degree-2 Laplacian gap");

  try {
    app.parse(argc, argv);
    if (angle->parsed()) return cmd_angle(angle_input, format);
    if (certify->parsed()) return cmd_certify(eps_path, format);
    if (coxeter->parsed()) return cmd_coxeter(cox_type, cox_rank, cox_m_file, format);
    if (table1->parsed()) return cmd_table1(family_rank, i2_bond, format);
    if (steinberg->parsed()) return cmd_steinberg(st_n, st_p, format);
    if (kacmoody->parsed()) return cmd_kacmoody(graph_path, km_p, format);
    if (walk->parsed())
      return cmd_walk(walk_group, walk_n, walk_p, walk_set[0], walk_type, walk_rank,
                      walk_iters, seed, format);
    if (so->parsed()) return cmd_so(so_n, so_variant[0], so_check, format);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const kk::certificate_error& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kExitCertificateFailed;
  } catch (const kk::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
