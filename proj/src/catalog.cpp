#include "qmatroid/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace qmatroid::catalog {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// "u24" -> (2,4); requires k <= n <= 6.
bool parse_uniform_name(const std::string& name, int& k, int& n) {
  if (name.size() != 3 || name[0] != 'u') return false;
  if (!std::isdigit(static_cast<unsigned char>(name[1])) ||
      !std::isdigit(static_cast<unsigned char>(name[2])))
    return false;
  k = name[1] - '0';
  n = name[2] - '0';
  return k <= n && n <= 6;
}

}  // namespace

Multigraph k2() { return Multigraph(2, {{"1", 0, 1}}, "k2"); }

Multigraph k3() { return Multigraph(3, {{"1", 0, 1}, {"2", 1, 2}, {"3", 0, 2}}, "k3"); }

Multigraph k4() {
  return Multigraph(
      4, {{"1", 0, 1}, {"2", 0, 2}, {"3", 0, 3}, {"4", 1, 2}, {"5", 1, 3}, {"6", 2, 3}},
      "k4");
}

Multigraph c4() {
  return Multigraph(4, {{"1", 0, 1}, {"2", 1, 2}, {"3", 2, 3}, {"4", 3, 0}}, "c4");
}

Multigraph theta() {
  // Two hub vertices joined by three internally disjoint paths of lengths
  // 1, 2, 2.
  return Multigraph(4, {{"1", 0, 1}, {"2", 0, 2}, {"3", 2, 1}, {"4", 0, 3}, {"5", 3, 1}},
                    "theta");
}

Multigraph single_loop() { return Multigraph(1, {{"1", 0, 0}}, "loop"); }

Multigraph bridge_and_loop() {
  return Multigraph(2, {{"1", 0, 1}, {"2", 1, 1}}, "bridgeloop");
}

FqMatrix u24_matrix(const Field& f) {
  return FqMatrix::from_ints(f, {{1, 0, 1, 1}, {0, 1, 1, -1}});
}

RepMatroid u24(const Field& f) { return RepMatroid(u24_matrix(f)); }

RepMatroid rank0_loops(const Field& f, int k) { return RepMatroid(FqMatrix(f, 1, k)); }

RepMatroid uniform_rep(int k, int n, const Field& f) {
  if (k < 0 || n < 0 || k > n) fail(ErrorKind::ParseError, "uniform needs 0 <= k <= n");
  if (f.order() <= n)
    fail(ErrorKind::FieldTooLarge,
         "field of order " + std::to_string(f.order()) + " is too small for " +
             std::to_string(n) + " points in general position");
  FqMatrix m(f, k, n);
  for (int j = 0; j < n; ++j) {
    FieldElement t = f.element_at(j);
    FieldElement p = f.one();
    for (int i = 0; i < k; ++i) {
      m.set(i, j, p);
      p = p * t;
    }
  }
  return RepMatroid(std::move(m));
}

bool is_graph_name(const std::string& name) {
  std::string n = lower(name);
  return n == "k2" || n == "k3" || n == "k4" || n == "c4" || n == "theta" || n == "loop" ||
         n == "bridgeloop";
}

Multigraph graph_by_name(const std::string& name) {
  std::string n = lower(name);
  if (n == "k2") return k2();
  if (n == "k3") return k3();
  if (n == "k4") return k4();
  if (n == "c4") return c4();
  if (n == "theta") return theta();
  if (n == "loop") return single_loop();
  if (n == "bridgeloop") return bridge_and_loop();
  fail(ErrorKind::UnknownLabel, "no catalog graph '" + name + "'");
}

std::vector<std::string> graph_names() {
  return {"k2", "k3", "k4", "c4", "theta", "loop", "bridgeloop"};
}

bool is_matroid_name(const std::string& name) {
  std::string n = lower(name);
  int k, nn;
  return is_graph_name(n) || n == "coloop" || n == "loops2" || n == "loops3" ||
         parse_uniform_name(n, k, nn);
}

RepMatroid matroid_by_name(const std::string& name, const Field& f) {
  std::string n = lower(name);
  if (n == "u24") return u24(f);  // the fixed four-column matrix, not Vandermonde
  if (n == "coloop") return cycle_matroid(k2(), f);
  if (n == "loops2") return rank0_loops(f, 2);
  if (n == "loops3") return rank0_loops(f, 3);
  if (is_graph_name(n)) return cycle_matroid(graph_by_name(n), f);
  int k, nn;
  if (parse_uniform_name(n, k, nn)) return uniform_rep(k, nn, f);
  fail(ErrorKind::UnknownLabel, "no catalog matroid '" + name + "'");
}

std::vector<std::string> matroid_names() {
  return {"u24", "k2",   "k3",     "k4",     "c4",  "theta",
          "loop", "bridgeloop", "coloop", "loops2", "loops3", "u13",
          "u23",  "u25",  "u36"};
}

RankOracleMatroid oracle_by_name(const std::string& name) {
  std::string n = lower(name);
  if (n == "coloop") return RankOracleMatroid::uniform(1, 1);
  if (n == "loop") return RankOracleMatroid::uniform(0, 1);
  if (n == "loops2") return RankOracleMatroid::uniform(0, 2);
  if (n == "loops3") return RankOracleMatroid::uniform(0, 3);
  if (is_graph_name(n)) return graphic_matroid_oracle(graph_by_name(n));
  int k, nn;
  if (parse_uniform_name(n, k, nn)) return RankOracleMatroid::uniform(k, nn);
  fail(ErrorKind::UnknownLabel, "no catalog matroid '" + name + "'");
}

}  // namespace qmatroid::catalog
