#pragma once

#include <string>
#include <vector>

#include "qmatroid/matroid.hpp"
#include "qmatroid/poly.hpp"

namespace qmatroid {

/// Edge of a multigraph; orientation runs origin -> endpoint and matters only
/// for incidence signs. Loops have origin == endpoint.
struct Edge {
  std::string id;
  int origin;
  int endpoint;
};

/// Multigraph with loops and parallel edges. Vertices are 0..n-1; edges keep
/// stable string ids that double as matroid ground labels. Immutable; edits
/// return copies.
class Multigraph {
 public:
  Multigraph(int vertices, std::vector<Edge> edges, std::string name = "");

  const std::string& name() const { return name_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const;
  int edge_index(const std::string& id) const;
  std::vector<std::string> edge_labels() const;
  Mask full_edge_mask() const {
    return edge_count() == 0 ? 0 : (Mask{1} << edge_count()) - 1;
  }

  /// Component count of (V, A); isolated vertices count. K(G) is the full mask.
  int component_count(Mask edge_subset) const;
  int component_count() const { return component_count(full_edge_mask()); }

  bool is_loop(int e) const;
  bool is_bridge(int e) const;

  Multigraph delete_edge(int e) const;
  /// Contracting a loop coincides with deleting it.
  Multigraph contract_edge(int e) const { return contract_edges(Mask{1} << e); }
  /// G/H: each component of (V, H) collapses to one vertex; edges of H vanish,
  /// the rest keep their ids (surviving parallels and loops included).
  Multigraph contract_edges(Mask h) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::string name_;
};

/// Signed incidence matrix: -1 at the origin, +1 at the endpoint, zero
/// columns for loops.
FqMatrix incidence_matrix(const Multigraph& g, const Field& f);

/// Matroid of the incidence columns (rows reduced to full rank).
RepMatroid cycle_matroid(const Multigraph& g, const Field& f);

/// The same matroid through the component-count oracle r(A) = |V| - K(A).
RankOracleMatroid graphic_matroid_oracle(const Multigraph& g);

/// Number of proper q-colorings by direct enumeration.
Int count_proper_colorings(const Multigraph& g, long q,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Chromatic polynomial, interpolated from exact color counts at
/// q = 0..|V|; identically zero for graphs with loops.
UniPoly chromatic_poly(const Multigraph& g, std::uint64_t budget = kDefaultEnumerationBudget);

/// Flow polynomial via the dual of the graphic matroid; field-free.
UniPoly flow_poly(const Multigraph& g, std::uint64_t budget = kDefaultEnumerationBudget);

/// Nowhere-zero flow count over a concrete field, by enumeration: every edge
/// carries a nonzero value and every vertex balances.
Int count_nowhere_zero_flows(const Multigraph& g, const Field& f,
                             std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qmatroid
