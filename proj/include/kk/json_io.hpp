#pragma once

#include <string>
#include <vector>

#include "kk/certificates.hpp"
#include "kk/coxeter.hpp"
#include "kk/subspaces.hpp"

namespace kk::json_io {

/// {"dim": d, "subspaces": [{"name": str, "vectors": [[...], ...]}]}
/// Vectors are rows and are orthonormalized on load.
subspaces::Arrangement load_arrangement(const std::string& path);
std::vector<std::string> arrangement_names(const std::string& path);

/// {"n": k, "eps": [[...]]} with a zero diagonal.
certificates::AngleMatrix load_eps(const std::string& path);

/// {"m": [[...]]} Coxeter matrix (m_ii = 1, m_ij >= 2, 0 for infinity).
coxeter::CoxeterSystem load_coxeter(const std::string& path);

/// {"n": k, "edges": [[i, j], ...]} simple undirected graph, 0-based vertices.
std::vector<std::vector<int>> load_graph(const std::string& path);

}  // namespace kk::json_io
