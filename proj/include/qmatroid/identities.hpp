#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qmatroid/budget.hpp"
#include "qmatroid/errors.hpp"
#include "qmatroid/matroid.hpp"
#include "qmatroid/numeric.hpp"
#include "qmatroid/poly.hpp"

namespace qmatroid {

// Subset-sum evaluators for the two expansions of the dual characteristic
// polynomial, one indexed by restrictions and one by contractions, plus the
// convolution identities they specialize. Everything here is templated over
// the matroid type: the formulas need only rank data, so they apply to rank
// oracles as well as represented matroids.

struct PointComparison {
  long q = 0;
  Rat lhs;
  Rat rhs;

  bool agrees() const { return lhs == rhs; }
};

/// Multi-point evaluation record for one identity on one matroid. The
/// verdict demands more agreeing points than the common degree bound of the
/// two sides, so a passing report certifies the polynomial identity, not
/// just a coincidence at the sampled points.
struct IdentityReport {
  std::string identity;
  std::string matroid;
  int degree_bound = 0;
  std::vector<PointComparison> points;
  bool verdict = false;
};

IdentityReport make_identity_report(std::string identity, std::string matroid,
                                    int degree_bound,
                                    const std::vector<long>& points,
                                    const std::function<Rat(long)>& lhs_at,
                                    const std::function<Rat(long)>& rhs_at);

/// q = 2 .. ground_size + 2: one point more than the degree bound, which is
/// what a passing verdict needs.
std::vector<long> default_check_points(int ground_size);

namespace detail {

inline void require_point(long q) {
  if (q < 2)
    fail(ErrorKind::InvalidQ,
         "identity evaluation needs q >= 2; q = 0 and q = 1 are poles of the "
         "expansion weights");
}

// Product of a polynomial in u and a polynomial in v, as a BiPoly.
inline BiPoly separated_product(const UniPoly& in_u, const UniPoly& in_v) {
  BiPoly out;
  for (int i = 0; i <= in_u.degree(); ++i) {
    if (in_u.coeff(i) == 0) continue;
    for (int j = 0; j <= in_v.degree(); ++j) {
      if (in_v.coeff(j) == 0) continue;
      out.add_term(i, j, in_u.coeff(i) * in_v.coeff(j));
    }
  }
  return out;
}

}  // namespace detail

/// Restriction-indexed expansion of chi of the dual:
///   (q-1)^|E| sum_A (q/(1-q))^|A| chi_{M|A}(q) / q^{r(A)}.
template <typename M>
Rat dual_char_by_restrictions(const M& m, long q,
                              std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::require_point(q);
  check_budget(pow_int(Int(2), static_cast<unsigned>(m.size())), budget,
               "restriction expansion");
  const Rat ratio = Rat(q) / Rat(1 - q);
  const Mask full = m.full_mask();
  Rat sum = 0;
  Mask a = 0;
  while (true) {
    const Rat chi(char_poly(m.restrict_to(a), budget).eval(Int(q)));
    sum += pow_rat(ratio, popcount(a)) * chi / pow_rat(Rat(q), m.rank(a));
    if (a == full) break;
    ++a;
  }
  return pow_rat(Rat(q - 1), m.size()) * sum;
}

/// Contraction-indexed expansion of the same value:
///   q^{-r(E)} sum_A (-1)^{|E|-|A|} (q-1)^|A| chi_{M/A}(q).
template <typename M>
Rat dual_char_by_contractions(const M& m, long q,
                              std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::require_point(q);
  check_budget(pow_int(Int(2), static_cast<unsigned>(m.size())), budget,
               "contraction expansion");
  const Mask full = m.full_mask();
  Rat sum = 0;
  Mask a = 0;
  while (true) {
    const int sz = popcount(a);
    const Rat sign = ((m.size() - sz) % 2 == 0) ? Rat(1) : Rat(-1);
    const Rat chi(char_poly(m.contract(a), budget).eval(Int(q)));
    sum += sign * pow_rat(Rat(q - 1), sz) * chi;
    if (a == full) break;
    ++a;
  }
  return sum / pow_rat(Rat(q), m.full_rank());
}

/// Zeta-weighted forms of the two expansions, with z+ = q/(q-1) and
/// z- = 1/(1-q):
///   chi_dual(q) z-^|E| == sum_A (-1)^{|E|-|A|} chi_{M|A}(q) q^{-r(A)} z+^|A|
///   chi_M(q) q^{-r(E)} z+^|E| == sum_A z-^|A| chi_{dual/(E-A)}(q)
/// Both verified by exact evaluation at the single point q.
template <typename M>
bool zeta_form_checks(const M& m, long q,
                      std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::require_point(q);
  check_budget(pow_int(Int(2), static_cast<unsigned>(m.size())), budget,
               "zeta form expansion");
  const Rat zeta_plus = Rat(q) / Rat(q - 1);
  const Rat zeta_minus = Rat(1) / Rat(1 - q);
  const auto dual = m.dual();
  const Rat chi_dual(char_poly(dual, budget).eval(Int(q)));
  const Rat chi_self(char_poly(m, budget).eval(Int(q)));

  const Mask full = m.full_mask();
  Rat restriction_sum = 0;
  Rat contraction_sum = 0;
  Mask a = 0;
  while (true) {
    const int sz = popcount(a);
    const Rat sign = ((m.size() - sz) % 2 == 0) ? Rat(1) : Rat(-1);
    const Rat chi_restr(char_poly(m.restrict_to(a), budget).eval(Int(q)));
    restriction_sum += sign * chi_restr / pow_rat(Rat(q), m.rank(a)) *
                       pow_rat(zeta_plus, sz);
    const Rat chi_dual_contr(
        char_poly(dual.contract(full & ~a), budget).eval(Int(q)));
    contraction_sum += pow_rat(zeta_minus, sz) * chi_dual_contr;
    if (a == full) break;
    ++a;
  }

  const bool first =
      chi_dual * pow_rat(zeta_minus, m.size()) == restriction_sum;
  const bool second = chi_self / pow_rat(Rat(q), m.full_rank()) *
                          pow_rat(zeta_plus, m.size()) ==
                      contraction_sum;
  return first && second;
}

/// Convolution formula for the Tutte polynomial, checked at the level of
/// coefficients: T_M(x,y) = sum_A T_{M|A}(0,y) * T_{M/A}(x,0).
template <typename M>
bool reiner_convolution_check(const M& m,
                              std::uint64_t budget = kDefaultEnumerationBudget) {
  check_budget(pow_int(Int(2), static_cast<unsigned>(m.size())), budget,
               "convolution expansion");
  const BiPoly lhs = tutte_poly(m, budget);
  BiPoly rhs;
  const Mask full = m.full_mask();
  Mask a = 0;
  while (true) {
    const UniPoly in_y = tutte_poly(m.restrict_to(a), budget).eval_u(0);
    const UniPoly in_x = tutte_poly(m.contract(a), budget).eval_v(0);
    rhs = rhs + detail::separated_product(in_x, in_y);
    if (a == full) break;
    ++a;
  }
  return lhs == rhs;
}

/// Four-parameter convolution for the Whitney rank generating function:
///   R_M(lambda xi, x y) = sum_A lambda^{r(E)-r(A)} (-y)^{|A|-r(A)}
///                         R_{M|A}(-lambda, -x) R_{M/A}(xi, y).
/// Specializing (x, lambda, y, xi) to (1, q, -q, -1/q) or (q, 1/q, -1, -q)
/// turns the left side into (-1)^{|E|-r(E)} chi_dual(q) and the right side
/// into the restriction or contraction expansion respectively.
template <typename M>
bool kung_identity_check(const M& m, const Rat& lambda, const Rat& xi,
                         const Rat& x, const Rat& y,
                         std::uint64_t budget = kDefaultEnumerationBudget) {
  check_budget(pow_int(Int(2), static_cast<unsigned>(m.size())), budget,
               "convolution expansion");
  const Rat lhs = whitney_rank_poly(m, budget).eval(lambda * xi, x * y);
  const Mask full = m.full_mask();
  Rat rhs = 0;
  Mask a = 0;
  while (true) {
    const Rat restr = whitney_rank_poly(m.restrict_to(a), budget).eval(-lambda, -x);
    const Rat contr = whitney_rank_poly(m.contract(a), budget).eval(xi, y);
    rhs += pow_rat(lambda, m.full_rank() - m.rank(a)) *
           pow_rat(-y, popcount(a) - m.rank(a)) * restr * contr;
    if (a == full) break;
    ++a;
  }
  return lhs == rhs;
}

/// Multi-point report for the restriction expansion against chi of the dual.
template <typename M>
IdentityReport dual_char_restriction_report(
    const M& m, const std::string& name, std::vector<long> points = {},
    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (points.empty()) points = default_check_points(m.size());
  const UniPoly chi_dual = char_poly(m.dual(), budget);
  return make_identity_report(
      "dual-char-by-restrictions", name, m.size(), points,
      [&](long q) { return Rat(chi_dual.eval(Int(q))); },
      [&](long q) { return dual_char_by_restrictions(m, q, budget); });
}

/// Multi-point report for the contraction expansion against chi of the dual.
template <typename M>
IdentityReport dual_char_contraction_report(
    const M& m, const std::string& name, std::vector<long> points = {},
    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (points.empty()) points = default_check_points(m.size());
  const UniPoly chi_dual = char_poly(m.dual(), budget);
  return make_identity_report(
      "dual-char-by-contractions", name, m.size(), points,
      [&](long q) { return Rat(chi_dual.eval(Int(q))); },
      [&](long q) { return dual_char_by_contractions(m, q, budget); });
}

}  // namespace qmatroid
