#include "qmatroid/graph.hpp"

#include <algorithm>
#include <numeric>

namespace qmatroid {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

}  // namespace

Multigraph::Multigraph(int vertices, std::vector<Edge> edges, std::string name)
    : n_(vertices), edges_(std::move(edges)), name_(std::move(name)) {
  if (n_ < 0) fail(ErrorKind::IndexOutOfRange, "negative vertex count");
  if (edge_count() > kMaxGroundSize)
    fail(ErrorKind::IndexOutOfRange, "edge set exceeds mask capacity");
  std::vector<std::string> ids;
  for (const Edge& e : edges_) {
    if (e.origin < 0 || e.origin >= n_ || e.endpoint < 0 || e.endpoint >= n_)
      fail(ErrorKind::IndexOutOfRange, "edge '" + e.id + "' references a missing vertex");
    ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    fail(ErrorKind::ParseError, "duplicate edge id");
}

const Edge& Multigraph::edge(int e) const {
  if (e < 0 || e >= edge_count()) fail(ErrorKind::IndexOutOfRange, "edge index");
  return edges_[e];
}

int Multigraph::edge_index(const std::string& id) const {
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].id == id) return i;
  fail(ErrorKind::UnknownLabel, "no edge '" + id + "'");
}

std::vector<std::string> Multigraph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.id);
  return out;
}

int Multigraph::component_count(Mask edge_subset) const {
  if (edge_subset & ~full_edge_mask())
    fail(ErrorKind::IndexOutOfRange, "edge subset outside the graph");
  UnionFind uf(n_);
  for (int i : mask_positions(edge_subset)) uf.unite(edges_[i].origin, edges_[i].endpoint);
  return uf.classes();
}

bool Multigraph::is_loop(int e) const { return edge(e).origin == edge(e).endpoint; }

bool Multigraph::is_bridge(int e) const {
  edge(e);
  return component_count(full_edge_mask() & ~(Mask{1} << e)) > component_count();
}

Multigraph Multigraph::delete_edge(int e) const {
  edge(e);
  std::vector<Edge> rest;
  for (int i = 0; i < edge_count(); ++i)
    if (i != e) rest.push_back(edges_[i]);
  return Multigraph(n_, std::move(rest), name_);
}

Multigraph Multigraph::contract_edges(Mask h) const {
  if (h & ~full_edge_mask()) fail(ErrorKind::IndexOutOfRange, "edge subset outside the graph");
  UnionFind uf(n_);
  for (int i : mask_positions(h)) uf.unite(edges_[i].origin, edges_[i].endpoint);
  std::vector<int> rep(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    int root = uf.find(v);
    if (rep[root] < 0) rep[root] = next++;
  }
  std::vector<Edge> rest;
  for (int i = 0; i < edge_count(); ++i) {
    if (h & (Mask{1} << i)) continue;
    rest.push_back({edges_[i].id, rep[uf.find(edges_[i].origin)], rep[uf.find(edges_[i].endpoint)]});
  }
  return Multigraph(next, std::move(rest), name_);
}

FqMatrix incidence_matrix(const Multigraph& g, const Field& f) {
  FqMatrix m(f, g.vertex_count(), g.edge_count());
  for (int j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges()[j];
    if (e.origin == e.endpoint) continue;
    m.set(e.origin, j, -f.one());
    m.set(e.endpoint, j, f.one());
  }
  return m;
}

RepMatroid cycle_matroid(const Multigraph& g, const Field& f) {
  return RepMatroid(incidence_matrix(g, f), g.edge_labels());
}

RankOracleMatroid graphic_matroid_oracle(const Multigraph& g) {
  int n = g.vertex_count();
  return RankOracleMatroid(
      g.edge_labels(), [g, n](Mask a) { return n - g.component_count(a); }, false);
}

Int count_proper_colorings(const Multigraph& g, long q, std::uint64_t budget) {
  if (q < 0) fail(ErrorKind::InvalidQ, "negative color count");
  int n = g.vertex_count();
  if (q == 0) return n == 0 ? 1 : 0;
  check_budget(pow_int(Int(q), static_cast<unsigned>(n)), budget, "coloring count");

  std::vector<long> color(n, 0);
  Int count = 0;
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges())
      if (color[e.origin] == color[e.endpoint]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    int pos = n - 1;
    while (pos >= 0 && ++color[pos] == q) color[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

UniPoly chromatic_poly(const Multigraph& g, std::uint64_t budget) {
  std::vector<std::pair<Int, Int>> pts;
  for (long q = 0; q <= g.vertex_count(); ++q)
    pts.push_back({Int(q), count_proper_colorings(g, q, budget)});
  return interpolate(pts);
}

UniPoly flow_poly(const Multigraph& g, std::uint64_t budget) {
  return char_poly(graphic_matroid_oracle(g).dual(), budget);
}

Int count_nowhere_zero_flows(const Multigraph& g, const Field& f, std::uint64_t budget) {
  int ne = g.edge_count();
  long q = f.order();
  check_budget(pow_int(Int(q - 1), static_cast<unsigned>(ne)), budget, "flow count");

  std::vector<long> idx(ne, 1);
  Int count = 0;
  while (true) {
    std::vector<FieldElement> net(g.vertex_count(), f.zero());
    for (int j = 0; j < ne; ++j) {
      const Edge& e = g.edges()[j];
      FieldElement k = f.element_at(idx[j]);
      if (e.origin == e.endpoint) continue;
      net[e.origin] -= k;
      net[e.endpoint] += k;
    }
    bool balanced = true;
    for (const auto& v : net)
      if (!v.is_zero()) {
        balanced = false;
        break;
      }
    if (balanced) ++count;

    int pos = ne - 1;
    while (pos >= 0 && ++idx[pos] == q) idx[pos--] = 1;
    if (pos < 0) break;
  }
  return count;
}

}  // namespace qmatroid
