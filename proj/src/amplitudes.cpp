#include "qmatroid/amplitudes.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include "qmatroid/budget.hpp"
#include "qmatroid/errors.hpp"

namespace qmatroid {

namespace {

// A state only enters an amplitude through how many of its edge arguments
// vanish, so each sum collapses to a histogram over that count: states with
// m vanishing arguments contribute (a+b)^m a^{|E|-m}.
Rat histogram_value(const std::vector<Int>& hist, const Propagator& prop) {
  const Rat on_zero = prop.a + prop.b;
  const int top = static_cast<int>(hist.size()) - 1;
  Rat total = 0;
  for (int m = 0; m <= top; ++m) {
    if (hist[static_cast<std::size_t>(m)] == 0) continue;
    total += Rat(hist[static_cast<std::size_t>(m)]) * pow_rat(on_zero, m) *
             pow_rat(prop.a, top - m);
  }
  return total;
}

bool advance(std::vector<long>& digits, long radix) {
  int pos = static_cast<int>(digits.size()) - 1;
  while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == radix - 1) {
    digits[static_cast<std::size_t>(pos)] = 0;
    --pos;
  }
  if (pos < 0) return false;
  ++digits[static_cast<std::size_t>(pos)];
  return true;
}

Multigraph spanning_subgraph(const Multigraph& g, Mask keep) {
  std::vector<Edge> sub;
  for (int e = 0; e < g.edge_count(); ++e)
    if (keep & (Mask{1} << e)) sub.push_back(g.edge(e));
  return Multigraph(g.vertex_count(), std::move(sub));
}

}  // namespace

Rat vacuum_fa_coordinate(const Multigraph& g, const Field& f,
                         const Propagator& prop, std::uint64_t budget) {
  const long q = f.order();
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  check_budget(pow_int(Int(q), static_cast<unsigned>(nv)), budget,
               "coordinate amplitude");
  // The only field data a state contributes is which differences
  // x_origin - x_endpoint vanish, i.e. which endpoint values coincide, so
  // states stay as plain index vectors. Loops always vanish.
  std::vector<Int> hist(static_cast<std::size_t>(ne) + 1, Int(0));
  std::vector<long> x(static_cast<std::size_t>(nv), 0);
  while (true) {
    int m = 0;
    for (const Edge& e : g.edges())
      if (x[static_cast<std::size_t>(e.origin)] ==
          x[static_cast<std::size_t>(e.endpoint)])
        ++m;
    ++hist[static_cast<std::size_t>(m)];
    if (!advance(x, q)) break;
  }
  return histogram_value(hist, prop);
}

Rat vacuum_fa_momentum(const Multigraph& g, const Field& f,
                       const Propagator& prop, std::uint64_t budget) {
  const long q = f.order();
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  check_budget(pow_int(Int(q), static_cast<unsigned>(ne)), budget,
               "momentum amplitude");
  std::vector<Int> hist(static_cast<std::size_t>(ne) + 1, Int(0));
  std::vector<long> k(static_cast<std::size_t>(ne), 0);
  std::vector<FieldElement> net(static_cast<std::size_t>(nv), f.zero());
  while (true) {
    for (auto& v : net) v = f.zero();
    int zeros = 0;
    for (int e = 0; e < ne; ++e) {
      if (k[static_cast<std::size_t>(e)] == 0) ++zeros;
      const Edge& ed = g.edge(e);
      if (ed.origin == ed.endpoint) continue;  // loops leave every vertex sum
      FieldElement ke = f.element_at(k[static_cast<std::size_t>(e)]);
      net[static_cast<std::size_t>(ed.origin)] =
          net[static_cast<std::size_t>(ed.origin)] - ke;
      net[static_cast<std::size_t>(ed.endpoint)] =
          net[static_cast<std::size_t>(ed.endpoint)] + ke;
    }
    bool conserved = true;
    for (const auto& v : net) {
      if (!v.is_zero()) {
        conserved = false;
        break;
      }
    }
    if (conserved) ++hist[static_cast<std::size_t>(zeros)];
    if (!advance(k, q)) break;
  }
  return histogram_value(hist, prop);
}

IdentityCheck fourier_duality_check(const Multigraph& g, const Field& f,
                                    const Propagator& prop,
                                    std::uint64_t budget) {
  const Rat q(f.order());
  Rat lhs =
      pow_rat(q, g.vertex_count()) * vacuum_fa_momentum(g, f, prop, budget);
  Propagator paired{prop.b, prop.a * q};
  Rat rhs = vacuum_fa_coordinate(g, f, paired, budget);
  return {lhs, rhs};
}

IdentityCheck deletion_contraction_check(const Multigraph& g, int e,
                                         const Field& f, const Propagator& prop,
                                         AmplitudeSpace space,
                                         std::uint64_t budget) {
  if (e < 0 || e >= g.edge_count()) fail(ErrorKind::IndexOutOfRange, "edge index");
  if (g.is_loop(e) || g.is_bridge(e))
    fail(ErrorKind::LoopOrIsthmus,
         "recursion applies to an edge that is neither loop nor bridge");
  Multigraph deleted = g.delete_edge(e);
  Multigraph contracted = g.contract_edge(e);
  if (space == AmplitudeSpace::Coordinate) {
    Rat lhs = vacuum_fa_coordinate(g, f, prop, budget);
    Rat rhs = prop.a * vacuum_fa_coordinate(deleted, f, prop, budget) +
              prop.b * vacuum_fa_coordinate(contracted, f, prop, budget);
    return {lhs, rhs};
  }
  Rat lhs = vacuum_fa_momentum(g, f, prop, budget);
  Rat rhs = prop.b * vacuum_fa_momentum(deleted, f, prop, budget) +
            prop.a * vacuum_fa_momentum(contracted, f, prop, budget);
  return {lhs, rhs};
}

BiPoly dichromatic_poly(const Multigraph& g, std::uint64_t budget) {
  const int ne = g.edge_count();
  check_budget(pow_int(Int(2), static_cast<unsigned>(ne)), budget,
               "dichromatic polynomial");
  BiPoly out;
  const Mask full = g.full_edge_mask();
  Mask a = 0;
  while (true) {
    const int comps = g.component_count(a);
    const int cycles = popcount(a) - g.vertex_count() + comps;
    out.add_term(comps, cycles, 1);
    if (a == full) break;
    ++a;
  }
  return out;
}

IdentityCheck fa_closed_form_check(const Multigraph& g, const Field& f,
                                   const Propagator& prop, AmplitudeSpace space,
                                   std::uint64_t budget) {
  if (prop.a == 0 || prop.b == 0)
    fail(ErrorKind::ZeroPropagatorConstant,
         "closed form takes quotients of the propagator constants");
  const Rat q(f.order());
  const BiPoly qpoly = dichromatic_poly(g, budget);
  const long nv = g.vertex_count();
  const long ne = g.edge_count();
  if (space == AmplitudeSpace::Coordinate) {
    Rat lhs = vacuum_fa_coordinate(g, f, prop, budget);
    Rat rhs = pow_rat(prop.a, ne - nv) * pow_rat(prop.b, nv) *
              qpoly.eval(q * prop.a / prop.b, prop.b / prop.a);
    return {lhs, rhs};
  }
  Rat lhs = vacuum_fa_momentum(g, f, prop, budget);
  Rat rhs = pow_rat(prop.a, nv) * pow_rat(prop.b, ne - nv) *
            qpoly.eval(prop.b / prop.a, q * prop.a / prop.b);
  return {lhs, rhs};
}

GraphIdentityChecks graph_identity_checks(const Multigraph& g, long q,
                                          std::uint64_t budget) {
  if (q < 2) fail(ErrorKind::InvalidQ, "subgraph expansions need q >= 2");
  const int ne = g.edge_count();
  check_budget(pow_int(Int(2), static_cast<unsigned>(ne)), budget,
               "subgraph expansion");
  const Rat zeta_plus = Rat(q) / Rat(q - 1);
  const Rat zeta_minus = Rat(1) / Rat(1 - q);
  const Rat qv = pow_rat(Rat(q), g.vertex_count());

  const Rat fg(flow_poly(g, budget).eval(Int(q)));
  const Rat pg(chromatic_poly(g, budget).eval(Int(q)));

  Rat restrictions = 0;
  Rat flows = 0;
  Rat contractions = 0;
  const Mask full = g.full_edge_mask();
  Mask h = 0;
  while (true) {
    const int eh = popcount(h);
    const Rat sign = ((ne - eh) % 2 == 0) ? Rat(1) : Rat(-1);
    const Multigraph sub = spanning_subgraph(g, h);
    const Rat ph(chromatic_poly(sub, budget).eval(Int(q)));
    const Rat fh(flow_poly(sub, budget).eval(Int(q)));
    const Rat pgh(chromatic_poly(g.contract_edges(h), budget).eval(Int(q)));
    restrictions += sign * ph / qv * pow_rat(zeta_plus, eh);
    flows += pow_rat(zeta_minus, eh) * fh;
    contractions += sign * pow_rat(Rat(q - 1), eh) * pgh;
    if (h == full) break;
    ++h;
  }

  GraphIdentityChecks out;
  out.flow_from_restrictions = {fg * pow_rat(zeta_minus, ne), restrictions};
  out.chromatic_from_flows = {pg / qv * pow_rat(zeta_plus, ne), flows};
  out.flow_from_contractions = {fg * qv, contractions};
  return out;
}

}  // namespace qmatroid
