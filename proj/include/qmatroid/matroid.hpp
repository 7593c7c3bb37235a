#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qmatroid/budget.hpp"
#include "qmatroid/fq_matrix.hpp"
#include "qmatroid/poly.hpp"

namespace qmatroid {

/// Ground subsets are bitmasks over column positions (not labels); ground
/// sets are capped well below 32 elements so every subset enumeration fits.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 30;

inline int popcount(Mask m) { return __builtin_popcount(m); }

std::vector<int> mask_positions(Mask m);

int label_index(const std::vector<std::string>& ground, const std::string& label);
Mask mask_from_labels(const std::vector<std::string>& ground,
                      const std::vector<std::string>& subset);

/// Matroid of a full-row-rank matrix over a finite field: rank of a subset is
/// the rank of the corresponding columns. Construction row-reduces, so the
/// stored matrix always has rank = rows; minors and duals preserve labels.
class RepMatroid {
 public:
  explicit RepMatroid(FqMatrix matrix, std::vector<std::string> labels = {});

  const FqMatrix& matrix() const { return m_; }
  const Field& field() const { return m_.field(); }
  const std::vector<std::string>& ground() const { return labels_; }
  int size() const { return m_.cols(); }
  int full_rank() const { return m_.rows(); }
  Mask full_mask() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }

  int rank(Mask a) const;

  RepMatroid restrict_to(Mask a) const;
  RepMatroid remove(Mask a) const { return restrict_to(full_mask() & ~a); }
  /// Contraction by column pivoting: zero columns are simply dropped,
  /// otherwise the pivot row is used to eliminate and then removed together
  /// with the column.
  RepMatroid contract(Mask a) const;
  RepMatroid dual() const;

  /// All pairs (basis mask, det of the basis columns); the rank-0 matroid has
  /// the single basis (empty set, 1).
  std::vector<std::pair<Mask, FieldElement>> bases(
      std::uint64_t budget = kDefaultEnumerationBudget) const;

 private:
  FqMatrix m_;
  std::vector<std::string> labels_;
};

/// Matroid given by an arbitrary rank oracle; minors and duals compose rank
/// functions directly, so this covers non-represented matroids too.
class RankOracleMatroid {
 public:
  RankOracleMatroid(std::vector<std::string> labels, std::function<int(Mask)> rank_fn,
                    bool validate = true);

  static RankOracleMatroid uniform(int k, int n);
  static RankOracleMatroid wrap(const RepMatroid& m);

  const std::vector<std::string>& ground() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int full_rank() const { return rank(full_mask()); }
  Mask full_mask() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }

  int rank(Mask a) const { return rank_(a); }

  RankOracleMatroid restrict_to(Mask a) const;
  RankOracleMatroid remove(Mask a) const { return restrict_to(full_mask() & ~a); }
  RankOracleMatroid contract(Mask a) const;
  RankOracleMatroid dual() const;

 private:
  std::vector<std::string> labels_;
  std::function<int(Mask)> rank_;
};

/// Characteristic polynomial: signed subset sum over the ground set. Zero
/// whenever the matroid has a loop.
template <typename M>
UniPoly char_poly(const M& m, std::uint64_t budget = kDefaultEnumerationBudget) {
  check_budget(pow_int(2, static_cast<unsigned>(m.size())), budget, "char_poly");
  int r = m.full_rank();
  std::vector<Int> c(r + 1, 0);
  for (Mask a = 0;; ++a) {
    int exp = r - m.rank(a);
    c[exp] += (popcount(a) % 2 == 0) ? 1 : -1;
    if (a == m.full_mask()) break;
  }
  return UniPoly(std::move(c));
}

/// Whitney rank generating polynomial R(u,v) = sum over subsets of
/// u^(r(E)-r(A)) v^(|A|-r(A)).
template <typename M>
BiPoly whitney_rank_poly(const M& m, std::uint64_t budget = kDefaultEnumerationBudget) {
  check_budget(pow_int(2, static_cast<unsigned>(m.size())), budget, "whitney_rank_poly");
  int r = m.full_rank();
  BiPoly out;
  for (Mask a = 0;; ++a) {
    out.add_term(r - m.rank(a), popcount(a) - m.rank(a), 1);
    if (a == m.full_mask()) break;
  }
  return out;
}

/// Tutte polynomial T(x,y) = R(x-1, y-1).
template <typename M>
BiPoly tutte_poly(const M& m, std::uint64_t budget = kDefaultEnumerationBudget) {
  return whitney_rank_poly(m, budget).shift(-1, -1);
}

/// Checks R(x, 1/x) = (1 + 1/x)^|E| x^r(E) at one exact rational point.
template <typename M>
bool rank_poly_diagonal_check(const M& m, const Rat& x,
                              std::uint64_t budget = kDefaultEnumerationBudget) {
  if (x == 0) fail(ErrorKind::ZeroArgument, "diagonal check needs x != 0");
  BiPoly r = whitney_rank_poly(m, budget);
  Rat lhs = r.eval(x, 1 / x);
  Rat rhs = pow_rat(1 + 1 / x, m.size()) * pow_rat(x, m.full_rank());
  return lhs == rhs;
}

}  // namespace qmatroid
