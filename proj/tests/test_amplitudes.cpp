#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>
#include <vector>

#include "qmatroid/amplitudes.hpp"
#include "qmatroid/catalog.hpp"
#include "qmatroid/errors.hpp"
#include "qmatroid/graph.hpp"
#include "qmatroid/matroid.hpp"

using namespace qmatroid;
namespace cat = qmatroid::catalog;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

bool advance(std::vector<long>& digits, long radix) {
  int pos = static_cast<int>(digits.size()) - 1;
  while (pos >= 0 && digits[pos] == radix - 1) {
    digits[pos] = 0;
    --pos;
  }
  if (pos < 0) return false;
  ++digits[pos];
  return true;
}

// Literal per-state product, with actual field subtraction in the edge
// arguments. Slow on purpose; the library path collapses states into
// histogram classes and must agree with this. Vertices listed in `pinned`
// are frozen at the zero element.
Rat brute_coordinate(const Multigraph& g, const Field& f, const Propagator& p,
                     const std::vector<int>& pinned = {}) {
  std::vector<long> x(g.vertex_count(), 0);
  Rat total = 0;
  while (true) {
    bool admissible = true;
    for (int v : pinned) admissible = admissible && x[v] == 0;
    if (admissible) {
      Rat prod = 1;
      for (const Edge& e : g.edges()) {
        FieldElement diff = f.element_at(x[e.origin]) - f.element_at(x[e.endpoint]);
        prod *= diff.is_zero() ? p.a + p.b : p.a;
      }
      total += prod;
    }
    if (!advance(x, f.order())) break;
  }
  return total;
}

// Momentum counterpart; conservation read off the signed incidence matrix.
Rat brute_momentum(const Multigraph& g, const Field& f, const Propagator& p) {
  const FqMatrix inc = incidence_matrix(g, f);
  std::vector<long> k(g.edge_count(), 0);
  Rat total = 0;
  while (true) {
    bool conserved = true;
    for (int v = 0; v < g.vertex_count() && conserved; ++v) {
      FieldElement s = f.zero();
      for (int e = 0; e < g.edge_count(); ++e)
        s = s + inc.at(v, e) * f.element_at(k[e]);
      conserved = s.is_zero();
    }
    if (conserved) {
      Rat prod = 1;
      for (int e = 0; e < g.edge_count(); ++e)
        prod *= k[e] == 0 ? p.a + p.b : p.a;
      total += prod;
    }
    if (!advance(k, f.order())) break;
  }
  return total;
}

Multigraph reversed(const Multigraph& g) {
  std::vector<Edge> flipped;
  for (const Edge& e : g.edges()) flipped.push_back({e.id, e.endpoint, e.origin});
  return Multigraph(g.vertex_count(), flipped, g.name());
}

}  // namespace

TEST_CASE("coordinate amplitude spot values") {
  Field f3(3), f5(5);

  CHECK(vacuum_fa_coordinate(cat::graph_by_name("k2"), f3, Propagator::norm()) == Rat(6));
  CHECK(vacuum_fa_coordinate(cat::graph_by_name("loop"), f5, Propagator::norm()) == Rat(0));
  // Loop states all carry the vanishing argument: q copies of (a + b).
  CHECK(vacuum_fa_coordinate(cat::graph_by_name("loop"), f5, {Rat(2), Rat(3)}) == Rat(25));
  CHECK(vacuum_fa_coordinate(Multigraph(3, {}), f3, {Rat(7), Rat(9)}) == Rat(27));
  // Constant weight 1 makes the sum count all of F_q^V.
  CHECK(vacuum_fa_coordinate(cat::graph_by_name("k4"), f5, {Rat(1), Rat(0)}) == Rat(625));
  // Monochrome-edge generating value: sum over states of 2^#vanishing.
  CHECK(vacuum_fa_coordinate(cat::graph_by_name("k3"), f3, {Rat(1), Rat(1)}) == Rat(66));
}

TEST_CASE("momentum amplitude spot values") {
  Field f3(3), f5(5);

  CHECK(vacuum_fa_momentum(cat::graph_by_name("loop"), f5, Propagator::norm()) == Rat(4));
  // A bridge forces its value to zero, which the norm weight kills.
  CHECK(vacuum_fa_momentum(cat::graph_by_name("k2"), f3, Propagator::norm()) == Rat(0));
  CHECK(vacuum_fa_momentum(cat::graph_by_name("k2"), f3, {Rat(2), Rat(3)}) == Rat(5));
  CHECK(vacuum_fa_momentum(Multigraph(3, {}), f5, {Rat(4), Rat(11)}) == Rat(1));

  // Constant weight 1 counts the conserved states: q^(|E| - |V| + K).
  for (const std::string& name : cat::graph_names()) {
    Multigraph g = cat::graph_by_name(name);
    const int nullity = g.edge_count() - g.vertex_count() + g.component_count();
    CHECK(vacuum_fa_momentum(g, f3, {Rat(1), Rat(0)}) ==
          Rat(pow_int(Int(3), nullity)));
  }
}

TEST_CASE("norm propagator recovers coloring and flow counts") {
  for (long q : {3L, 5L}) {
    Field f(q);
    for (const std::string& name : cat::graph_names()) {
      Multigraph g = cat::graph_by_name(name);
      CAPTURE(name);
      CAPTURE(q);
      CHECK(vacuum_fa_coordinate(g, f, Propagator::norm()) ==
            Rat(count_proper_colorings(g, q)));
      CHECK(vacuum_fa_coordinate(g, f, Propagator::norm()) ==
            Rat(chromatic_poly(g).eval(Int(q))));
      CHECK(vacuum_fa_momentum(g, f, Propagator::norm()) ==
            Rat(count_nowhere_zero_flows(g, f)));
    }
  }
}

TEST_CASE("histogram path matches the literal product sum") {
  Field f3(3);
  const Propagator p{Rat(2), Rat(-1) / Rat(3)};
  for (const char* name : {"k3", "c4", "theta", "bridgeloop", "loop"}) {
    Multigraph g = cat::graph_by_name(name);
    CAPTURE(name);
    CHECK(vacuum_fa_coordinate(g, f3, p) == brute_coordinate(g, f3, p));
    CHECK(vacuum_fa_momentum(g, f3, p) == brute_momentum(g, f3, p));
  }
}

TEST_CASE("fourier duality") {
  const std::vector<Propagator> props = {
      Propagator::norm(), {Rat(2), Rat(3)}, {Rat(-1) / Rat(2), Rat(1)}};
  for (long q : {3L, 5L}) {
    Field f(q);
    for (const char* name : {"k3", "c4", "theta", "loop", "bridgeloop"}) {
      Multigraph g = cat::graph_by_name(name);
      for (const Propagator& p : props) {
        CAPTURE(name);
        CAPTURE(q);
        IdentityCheck c = fourier_duality_check(g, f, p);
        CHECK(c.holds());
      }
    }
  }

  // One worked instance kept concrete: the conserved states of the 4-cycle
  // are the q multiples of the circulation, so the momentum side is
  // (a+b)^4 + (q-1) a^4.
  Field f3(3);
  Multigraph c4 = cat::graph_by_name("c4");
  CHECK(vacuum_fa_momentum(c4, f3, {Rat(2), Rat(5)}) == Rat(2433));
  IdentityCheck c = fourier_duality_check(c4, f3, {Rat(2), Rat(5)});
  CHECK(c.holds());
  CHECK(c.lhs == Rat(81) * Rat(2433));
}

TEST_CASE("corollary specializations of the duality") {
  for (long q : {3L, 5L}) {
    Field f(q);
    for (const std::string& name : cat::graph_names()) {
      Multigraph g = cat::graph_by_name(name);
      CAPTURE(name);
      CAPTURE(q);
      // Flow count from the coordinate side at (-1, q).
      CHECK(Rat(count_nowhere_zero_flows(g, f)) ==
            pow_rat(Rat(q), -g.vertex_count()) *
                vacuum_fa_coordinate(g, f, {Rat(-1), Rat(q)}));
      // Coloring count from the momentum side at (-1/q, 1).
      CHECK(Rat(count_proper_colorings(g, q)) ==
            pow_rat(Rat(q), g.vertex_count()) *
                vacuum_fa_momentum(g, f, {Rat(-1) / Rat(q), Rat(1)}));
    }
  }
}

TEST_CASE("pinning one vertex per component divides the sum by q^K") {
  Field f5(5);
  const Propagator p{Rat(3), Rat(-2)};

  for (const char* name : {"k3", "c4", "theta", "bridgeloop", "loop"}) {
    Multigraph g = cat::graph_by_name(name);
    CAPTURE(name);
    REQUIRE(g.component_count() == 1);
    CHECK(vacuum_fa_coordinate(g, f5, p) ==
          Rat(5) * brute_coordinate(g, f5, p, {0}));
  }

  // Two disjoint edges: K = 2, one pin per component.
  Multigraph pair(4, {{"a", 0, 1}, {"b", 2, 3}});
  REQUIRE(pair.component_count() == 2);
  CHECK(vacuum_fa_coordinate(pair, f5, p) ==
        Rat(25) * brute_coordinate(pair, f5, p, {0, 2}));
}

TEST_CASE("deletion and contraction recursion") {
  const std::vector<Propagator> props = {Propagator::norm(), {Rat(2), Rat(3)}};
  for (long q : {3L, 5L}) {
    Field f(q);
    for (const std::string& name : cat::graph_names()) {
      Multigraph g = cat::graph_by_name(name);
      for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e) || g.is_bridge(e)) continue;
        for (const Propagator& p : props) {
          CAPTURE(name);
          CAPTURE(q);
          CAPTURE(e);
          CHECK(deletion_contraction_check(g, e, f, p,
                                           AmplitudeSpace::Coordinate)
                    .holds());
          CHECK(deletion_contraction_check(g, e, f, p, AmplitudeSpace::Momentum)
                    .holds());
        }
      }
    }
  }
}

TEST_CASE("recursion rejects loops, bridges, and bad indices") {
  Field f3(3);
  Multigraph k2 = cat::graph_by_name("k2");
  Multigraph loop = cat::graph_by_name("loop");
  Multigraph bl = cat::graph_by_name("bridgeloop");

  CHECK(kind_of([&] {
          deletion_contraction_check(k2, 0, f3, Propagator::norm(),
                                     AmplitudeSpace::Coordinate);
        }) == ErrorKind::LoopOrIsthmus);
  CHECK(kind_of([&] {
          deletion_contraction_check(loop, 0, f3, Propagator::norm(),
                                     AmplitudeSpace::Momentum);
        }) == ErrorKind::LoopOrIsthmus);
  for (int e = 0; e < bl.edge_count(); ++e)
    CHECK(kind_of([&] {
            deletion_contraction_check(bl, e, f3, Propagator::norm(),
                                       AmplitudeSpace::Coordinate);
          }) == ErrorKind::LoopOrIsthmus);
  CHECK(kind_of([&] {
          deletion_contraction_check(k2, 5, f3, Propagator::norm(),
                                     AmplitudeSpace::Coordinate);
        }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("amplitudes ignore edge orientation") {
  Field f5(5);
  const Propagator p{Rat(2), Rat(3)};
  for (const char* name : {"c4", "theta", "k4"}) {
    Multigraph g = cat::graph_by_name(name);
    Multigraph r = reversed(g);
    CAPTURE(name);
    CHECK(vacuum_fa_coordinate(g, f5, p) == vacuum_fa_coordinate(r, f5, p));
    CHECK(vacuum_fa_momentum(g, f5, p) == vacuum_fa_momentum(r, f5, p));
  }
}

TEST_CASE("dichromatic polynomial") {
  Field f5(5);

  // Single loop: the empty subset contributes u, the loop itself uv.
  BiPoly loop_expected;
  loop_expected.add_term(1, 0, 1);
  loop_expected.add_term(1, 1, 1);
  CHECK(dichromatic_poly(cat::graph_by_name("loop")) == loop_expected);

  BiPoly c4_expected;
  c4_expected.add_term(4, 0, 1);
  c4_expected.add_term(3, 0, 4);
  c4_expected.add_term(2, 0, 6);
  c4_expected.add_term(1, 0, 4);
  c4_expected.add_term(1, 1, 1);
  CHECK(dichromatic_poly(cat::graph_by_name("c4")) == c4_expected);

  BiPoly edgeless_expected;
  edgeless_expected.add_term(2, 0, 1);
  CHECK(dichromatic_poly(Multigraph(2, {})) == edgeless_expected);

  // Against the Whitney rank polynomial of the cycle matroid, shifted by
  // the component count of the whole graph.
  for (const std::string& name : cat::graph_names()) {
    Multigraph g = cat::graph_by_name(name);
    CAPTURE(name);
    BiPoly shift;
    shift.add_term(g.component_count(), 0, 1);
    CHECK(dichromatic_poly(g) == shift * whitney_rank_poly(cycle_matroid(g, f5)));
  }

  CHECK(kind_of([&] { dichromatic_poly(cat::graph_by_name("c4"), 8); }) ==
        ErrorKind::EnumerationBudgetExceeded);
}

TEST_CASE("closed form through the dichromatic polynomial") {
  const std::vector<Propagator> props = {
      Propagator::norm(), {Rat(2), Rat(3)}, {Rat(-1) / Rat(2), Rat(1)}};
  for (long q : {3L, 5L}) {
    Field f(q);
    for (const std::string& name : cat::graph_names()) {
      Multigraph g = cat::graph_by_name(name);
      for (const Propagator& p : props) {
        CAPTURE(name);
        CAPTURE(q);
        CHECK(fa_closed_form_check(g, f, p, AmplitudeSpace::Coordinate).holds());
        CHECK(fa_closed_form_check(g, f, p, AmplitudeSpace::Momentum).holds());
      }
    }
  }

  Field f3(3);
  IdentityCheck tri =
      fa_closed_form_check(cat::graph_by_name("k3"), f3, Propagator::norm(),
                           AmplitudeSpace::Coordinate);
  CHECK(tri.holds());
  CHECK(tri.lhs == Rat(6));

  CHECK(kind_of([&] {
          fa_closed_form_check(cat::graph_by_name("k3"), f3, {Rat(0), Rat(1)},
                               AmplitudeSpace::Coordinate);
        }) == ErrorKind::ZeroPropagatorConstant);
  CHECK(kind_of([&] {
          fa_closed_form_check(cat::graph_by_name("k3"), f3, {Rat(1), Rat(0)},
                               AmplitudeSpace::Momentum);
        }) == ErrorKind::ZeroPropagatorConstant);
}

TEST_CASE("subgraph expansion identities") {
  for (long q = 2; q <= 10; ++q) {
    GraphIdentityChecks k3 = graph_identity_checks(cat::graph_by_name("k3"), q);
    CAPTURE(q);
    CHECK(k3.all_hold());
  }

  // q = 4 exercises a non-prime evaluation point; the identities are
  // polynomial in q and owe nothing to field structure.
  CHECK(graph_identity_checks(cat::graph_by_name("k2"), 4).all_hold());
  CHECK(graph_identity_checks(cat::graph_by_name("theta"), 4).all_hold());

  GraphIdentityChecks c4 = graph_identity_checks(cat::graph_by_name("c4"), 3);
  CHECK(c4.all_hold());
  CHECK(c4.flow_from_contractions.lhs == Rat(162));

  CHECK(kind_of([&] { graph_identity_checks(cat::graph_by_name("k3"), 1); }) ==
        ErrorKind::InvalidQ);
  CHECK(kind_of([&] { graph_identity_checks(cat::graph_by_name("k3"), 0); }) ==
        ErrorKind::InvalidQ);
  CHECK(kind_of([&] { graph_identity_checks(cat::graph_by_name("c4"), 3, 8); }) ==
        ErrorKind::EnumerationBudgetExceeded);
}

TEST_CASE("contraction expansion of the 4-cycle, term by term") {
  Multigraph c4 = cat::graph_by_name("c4");
  const long q = 3;

  // Group the contraction expansion by subset size at q = 3.
  std::vector<Rat> by_size(c4.edge_count() + 1, Rat(0));
  for (Mask h = 0;; ++h) {
    const int eh = popcount(h);
    const Rat sign = ((c4.edge_count() - eh) % 2 == 0) ? Rat(1) : Rat(-1);
    by_size[eh] += sign * pow_rat(Rat(q - 1), eh) *
                   Rat(chromatic_poly(c4.contract_edges(h)).eval(Int(q)));
    if (h == c4.full_edge_mask()) break;
  }
  CHECK(by_size[0] == Rat(18));
  CHECK(by_size[1] == Rat(-48));
  CHECK(by_size[2] == Rat(144));
  CHECK(by_size[3] == Rat(0));
  CHECK(by_size[4] == Rat(48));
  CHECK(by_size[0] + by_size[1] + by_size[2] + by_size[3] + by_size[4] ==
        Rat(162));

  // The same identity at the level of polynomial coefficients. Contracting
  // one edge gives a triangle, two a double edge on two vertices, three a
  // vertex with a loop (chromatically zero), four a bare vertex.
  UniPoly x = UniPoly::x();
  UniPoly xm1({Int(-1), Int(1)});
  UniPoly p_c4 = chromatic_poly(c4);
  UniPoly p_tri = chromatic_poly(cat::graph_by_name("k3"));
  UniPoly p_double = chromatic_poly(Multigraph(2, {{"a", 0, 1}, {"b", 0, 1}}));
  UniPoly lhs = x.pow(4) * xm1;
  UniPoly rhs = p_c4 - xm1 * p_tri * Int(4) + xm1.pow(2) * p_double * Int(6) +
                xm1.pow(4) * x;
  CHECK(lhs == rhs);
}

TEST_CASE("amplitude budgets") {
  Field f5(5);
  Multigraph k4 = cat::graph_by_name("k4");
  CHECK(kind_of([&] { vacuum_fa_coordinate(k4, f5, Propagator::norm(), 100); }) ==
        ErrorKind::EnumerationBudgetExceeded);
  CHECK(kind_of([&] { vacuum_fa_momentum(k4, f5, Propagator::norm(), 100); }) ==
        ErrorKind::EnumerationBudgetExceeded);
}
