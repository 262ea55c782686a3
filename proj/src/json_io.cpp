#include "kk/json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "kk/errors.hpp"

namespace kk::json_io {

namespace {

nlohmann::json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

subspaces::Arrangement load_arrangement(const std::string& path) {
  const nlohmann::json j = load_file(path);
  if (!j.contains("dim") || !j.contains("subspaces"))
    throw input_error("arrangement JSON needs \"dim\" and \"subspaces\"");
  const std::size_t dim = j.at("dim").get<std::size_t>();

  subspaces::Arrangement arr;
  arr.ambient_dim = dim;
  for (const auto& js : j.at("subspaces")) {
    const auto vectors = js.at("vectors").get<std::vector<std::vector<double>>>();
    arr.subspaces.push_back(subspaces::from_rows(vectors, dim));
  }
  if (arr.subspaces.empty()) throw input_error("arrangement JSON has no subspaces");
  return arr;
}

std::vector<std::string> arrangement_names(const std::string& path) {
  const nlohmann::json j = load_file(path);
  std::vector<std::string> names;
  for (const auto& js : j.at("subspaces"))
    names.push_back(js.value("name", "V" + std::to_string(names.size() + 1)));
  return names;
}

certificates::AngleMatrix load_eps(const std::string& path) {
  const nlohmann::json j = load_file(path);
  if (!j.contains("n") || !j.contains("eps"))
    throw input_error("eps JSON needs \"n\" and \"eps\"");
  const std::size_t n = j.at("n").get<std::size_t>();
  const auto rows = j.at("eps").get<std::vector<std::vector<double>>>();
  if (rows.size() != n) throw input_error("eps JSON: matrix size does not match n");
  Matrix eps(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw input_error("eps JSON: ragged matrix");
    for (std::size_t k = 0; k < n; ++k) eps(i, k) = rows[i][k];
  }
  return certificates::AngleMatrix::from_eps(eps);
}

coxeter::CoxeterSystem load_coxeter(const std::string& path) {
  const nlohmann::json j = load_file(path);
  if (!j.contains("m")) throw input_error("Coxeter JSON needs \"m\"");
  return coxeter::custom_system(j.at("m").get<std::vector<std::vector<int>>>());
}

std::vector<std::vector<int>> load_graph(const std::string& path) {
  const nlohmann::json j = load_file(path);
  if (!j.contains("n") || !j.contains("edges"))
    throw input_error("graph JSON needs \"n\" and \"edges\"");
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const auto& e : j.at("edges")) {
    const auto pair = e.get<std::vector<std::size_t>>();
    if (pair.size() != 2 || pair[0] >= n || pair[1] >= n || pair[0] == pair[1])
      throw input_error("graph JSON: bad edge");
    adj[pair[0]][pair[1]] = 1;
    adj[pair[1]][pair[0]] = 1;
  }
  return adj;
}

}  // namespace kk::json_io
