#pragma once

#include <cstdint>
#include <vector>

#include "qmatroid/budget.hpp"
#include "qmatroid/field.hpp"
#include "qmatroid/fq_matrix.hpp"
#include "qmatroid/matroid.hpp"
#include "qmatroid/numeric.hpp"

namespace qmatroid {

/// Unit weight per matrix column, in column order. Every entry must be
/// nonzero; the enumeration routines below range over all such vectors.
class AlphaVector {
 public:
  AlphaVector(const Field& f, std::vector<FieldElement> values);
  static AlphaVector ones(const Field& f, int n);
  static AlphaVector from_ints(const Field& f, const std::vector<long>& values);

  const Field& field() const { return *f_; }
  int size() const { return static_cast<int>(values_.size()); }
  const FieldElement& at(int i) const;
  const std::vector<FieldElement>& values() const { return values_; }

 private:
  const Field* f_;
  std::vector<FieldElement> values_;
};

/// Sum over all column subsets of size rows() of det^2 times the product of
/// the subset's weights. Works on any matrix: a row-rank-deficient matrix
/// gives 0, a matrix with no rows gives 1 (the empty minor).
FieldElement matrix_basis_sum(const FqMatrix& m, const AlphaVector& alpha,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Same sum restricted to the bases of the matroid; agrees with
/// matrix_basis_sum on the representation matrix.
FieldElement basis_sum(const RepMatroid& m, const AlphaVector& alpha,
                       std::uint64_t budget = kDefaultEnumerationBudget);

/// M diag(alpha) M^T. Symmetric; det equals basis_sum (weighted matrix-tree).
FqMatrix weighted_laplacian(const RepMatroid& m, const AlphaVector& alpha);

enum class ProfileStrategy {
  Shortcut,      // maximal nonsingular principal submatrix of the Laplacian
  SubsetSearch,  // literal minimum row-deletion search, smallest sets first
};

/// A minimum-cardinality row set whose deletion leaves a nonzero basis sum,
/// with that witness value. rank is rows - |dropped_rows| and equals the rank
/// of the weighted Laplacian; the quadratic character of minor does not depend
/// on which qualifying row set was picked.
struct LaplacianProfile {
  std::vector<int> dropped_rows;
  int rank = 0;
  FieldElement minor;
};

LaplacianProfile laplacian_profile(const RepMatroid& m, const AlphaVector& alpha,
                                   ProfileStrategy strategy = ProfileStrategy::Shortcut,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// Sign source for the weight below. Characteristic takes the sign of the
/// even-rank branch from p mod 4; FieldSize takes it from q mod 4, the
/// classical quadratic Gauss sum sign. The two differ exactly when d is even
/// and p = 3 (mod 4), e.g. q = 9.
enum class GaussConvention { Characteristic, FieldSize };

/// Normalization weight of a rank-n quadratic character sum: 0 for n odd,
/// 1/q^{n/2} or 1/(-q)^{n/2} for n even depending on the sign convention,
/// and 1 for n = 0.
Rat gauss_weight(const Field& f, int n,
                 GaussConvention convention = GaussConvention::Characteristic);

struct CharsumResult {
  Rat value;
  std::vector<std::uint64_t> rank_histogram;  // indexed by Laplacian rank
};

/// Character-sum form of the dual characteristic polynomial at q: the sum of
/// gauss_weight(q, rank) * eta(minor) over all unit weight vectors. Exact
/// rational accumulation; the enumeration is split into contiguous chunks when
/// workers > 1 and reduced in chunk order, so the total is deterministic.
CharsumResult dual_char_charsum(const RepMatroid& m,
                                GaussConvention convention = GaussConvention::Characteristic,
                                ProfileStrategy strategy = ProfileStrategy::Shortcut,
                                std::uint64_t budget = kDefaultEnumerationBudget,
                                int workers = 1);

/// Whether the fixed 2x4 quadruple-point matrix has pairwise independent
/// columns over f, i.e. still represents the rank-2 uniform matroid.
bool u24_columns_pairwise_independent(const Field& f);

struct ReducedCheckResult {
  bool pairwise_independent = false;
  Rat lhs;  // (q-1)(q-4)
  Rat rhs;  // gauss_weight(q,2) * sum of eta(basis sum), eta(0) read as 0
  bool holds = false;
};

/// The scalar identity the quadruple-point matroid reduces the character-sum
/// formula to. Computed regardless of pairwise independence; callers decide
/// what a failure means when the matrix degenerates.
ReducedCheckResult u24_reduced_identity(const Field& f,
                                        GaussConvention convention = GaussConvention::Characteristic,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qmatroid
