#pragma once

#include <string>
#include <vector>

#include "qmatroid/graph.hpp"
#include "qmatroid/matroid.hpp"

namespace qmatroid::catalog {

// Fixed desk-scale corpus every verification suite runs against.

Multigraph k2();
Multigraph k3();
Multigraph k4();
Multigraph c4();
Multigraph theta();
Multigraph single_loop();
Multigraph bridge_and_loop();

/// The standard rank-2 four-column matrix in general position (columns
/// pairwise independent over every odd-characteristic field).
FqMatrix u24_matrix(const Field& f);
RepMatroid u24(const Field& f);

/// k parallel loop elements: the rank-0 matroid.
RepMatroid rank0_loops(const Field& f, int k);

/// Vandermonde representation of the uniform matroid U_{k,n}; needs q > n so
/// the columns sit in general position.
RepMatroid uniform_rep(int k, int n, const Field& f);

/// Graph catalog lookup ("k2", "k3", "k4", "c4", "theta", "loop",
/// "bridgeloop"); UnknownLabel otherwise.
bool is_graph_name(const std::string& name);
Multigraph graph_by_name(const std::string& name);
std::vector<std::string> graph_names();

/// Matroid catalog lookup: "u24", any "u<k><n>" with k <= n <= 6 (Vandermonde
/// representation), graph names (cycle matroids), "coloop" (= k2), "loop",
/// "loops2", "loops3". UnknownLabel otherwise.
bool is_matroid_name(const std::string& name);
RepMatroid matroid_by_name(const std::string& name, const Field& f);
std::vector<std::string> matroid_names();

/// Rank-oracle versions for identity suites: "u<k><n>" become uniform
/// oracles, graphs use the component-count oracle, rank-0 names use size
/// oracles. Same name set as matroid_by_name.
RankOracleMatroid oracle_by_name(const std::string& name);

}  // namespace qmatroid::catalog
