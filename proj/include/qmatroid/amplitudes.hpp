#pragma once

#include <cstdint>

#include "qmatroid/field.hpp"
#include "qmatroid/graph.hpp"
#include "qmatroid/numeric.hpp"
#include "qmatroid/poly.hpp"

namespace qmatroid {

/// Edge weight Delta(x) = a + b*delta(x): value a + b when the argument
/// vanishes, a otherwise. The same shape serves both spaces; in momentum
/// space the coefficients are conventionally written with tildes.
struct Propagator {
  Rat a;
  Rat b;

  /// The norm weight 1 - delta(x): 0 on zero, 1 elsewhere. With it the
  /// coordinate sum counts proper colorings and the momentum sum counts
  /// nowhere-zero flows.
  static Propagator norm() { return {Rat(1), Rat(-1)}; }
};

enum class AmplitudeSpace { Coordinate, Momentum };

/// Vacuum coordinate-space amplitude: sum over all x in F_q^V of the product
/// of Delta(x_origin - x_endpoint) over the edges. Only zero-tests of the
/// differences enter, so the result is a rational in the propagator
/// coefficients. Edgeless graphs give q^|V|. Budget bounds q^|V|.
Rat vacuum_fa_coordinate(const Multigraph& g, const Field& f,
                         const Propagator& prop,
                         std::uint64_t budget = kDefaultEnumerationBudget);

/// Vacuum momentum-space amplitude: sum over edge assignments k in F_q^E,
/// restricted to those conserved at every vertex (signed incident sum zero),
/// of the product of Delta(k_e). Loops are unconstrained. Budget bounds q^|E|.
Rat vacuum_fa_momentum(const Multigraph& g, const Field& f,
                       const Propagator& prop,
                       std::uint64_t budget = kDefaultEnumerationBudget);

/// Fourier pairing of the two spaces:
///   q^|V| * momentum(q; a, b) == coordinate(q; b, a*q).
IdentityCheck fourier_duality_check(const Multigraph& g, const Field& f,
                                    const Propagator& prop,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Deletion/contraction recursion for edge e, which must be neither a loop
/// nor a bridge (LoopOrIsthmus otherwise):
///   coordinate: F(G) == a * F(G - e) + b * F(G / e)
///   momentum:   F(G) == b * F(G - e) + a * F(G / e)
IdentityCheck deletion_contraction_check(const Multigraph& g, int e,
                                         const Field& f, const Propagator& prop,
                                         AmplitudeSpace space,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

/// Q_G(u, v) = sum over edge subsets A of u^{K(A)} v^{|A| - |V| + K(A)},
/// K counting components with isolated vertices. Equals u^{K(G)} times the
/// Whitney rank polynomial of the cycle matroid. Budget bounds 2^|E|.
BiPoly dichromatic_poly(const Multigraph& g,
                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Closed form of the vacuum amplitude through Q_G; both propagator
/// coefficients must be nonzero (ZeroPropagatorConstant otherwise):
///   coordinate: F(q; a, b) == a^{|E|-|V|} b^{|V|} Q_G(q a/b, b/a)
///   momentum:   F(q; a, b) == a^{|V|} b^{|E|-|V|} Q_G(b/a, q a/b)
IdentityCheck fa_closed_form_check(const Multigraph& g, const Field& f,
                                   const Propagator& prop, AmplitudeSpace space,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// The three flow/chromatic expansions over spanning subgraphs, evaluated
/// exactly at an integer q >= 2 (InvalidQ below that; no primality needed,
/// the identities are polynomial in q). Budget bounds 2^|E| subgraph terms.
///
/// With z+ = q/(q-1) and z- = 1/(1-q), H running over spanning subgraphs:
///   flow_from_restrictions:
///     F_G(q) z-^|E| == sum_H (-1)^{|E|-|E(H)|} P_H(q) q^{-|V|} z+^{|E(H)|}
///   chromatic_from_flows:
///     P_G(q) q^{-|V|} z+^|E| == sum_H z-^{|E(H)|} F_H(q)
///   flow_from_contractions:
///     F_G(q) q^|V| == sum_H (-1)^{|E|-|E(H)|} (q-1)^{|E(H)|} P_{G/H}(q)
struct GraphIdentityChecks {
  IdentityCheck flow_from_restrictions;
  IdentityCheck chromatic_from_flows;
  IdentityCheck flow_from_contractions;

  bool all_hold() const {
    return flow_from_restrictions.holds() && chromatic_from_flows.holds() &&
           flow_from_contractions.holds();
  }
};

GraphIdentityChecks graph_identity_checks(const Multigraph& g, long q,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qmatroid
