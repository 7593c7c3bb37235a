#pragma once

#include <string>
#include <vector>

#include "qmatroid/field.hpp"

namespace qmatroid {

/// Dense matrix over one Field. Immutable value semantics apart from set();
/// every operation returns a fresh matrix. Desk-scale only: no attempt at
/// asymptotically fast elimination.
class FqMatrix {
 public:
  FqMatrix(const Field& f, int rows, int cols);
  static FqMatrix identity(const Field& f, int n);
  /// Entries given as integers, reduced into the field (prime fields mostly;
  /// extension fields get the image of Z).
  static FqMatrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return *f_; }

  const FieldElement& at(int r, int c) const { return e_[index(r, c)]; }
  void set(int r, int c, const FieldElement& v);

  FqMatrix transpose() const;
  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix select_rows(const std::vector<int>& idx) const;
  FqMatrix select_columns(const std::vector<int>& idx) const;
  /// Right-multiplication by diag(s): column j scaled by s[j].
  FqMatrix scale_columns(const std::vector<FieldElement>& s) const;

  bool operator==(const FqMatrix& o) const;
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }
  std::string str() const;

 private:
  std::size_t index(int r, int c) const;

  const Field* f_;
  int rows_, cols_;
  std::vector<FieldElement> e_;  // row-major
};

int rank(const FqMatrix& m);

/// Exact determinant by elimination; 0x0 determinant is 1 (empty product).
FieldElement det(const FqMatrix& m);

/// Reduced row echelon form plus the pivot column positions, for duals and
/// contraction bookkeeping.
struct EchelonForm {
  FqMatrix mat;
  std::vector<int> pivot_cols;
};
EchelonForm rref(const FqMatrix& m);

/// Keeps a maximal linearly independent subset of the original rows,
/// first-come: a row survives iff it is outside the span of the survivors
/// above it. Rows are returned verbatim, not reduced.
FqMatrix row_reduce_full_rank(const FqMatrix& m);

/// Square submatrix on the given row-and-column index set, order preserved.
FqMatrix principal_submatrix(const FqMatrix& m, const std::vector<int>& keep);

struct PrincipalMinor {
  std::vector<int> keep;
  FieldElement minor;
};

/// For symmetric m: the lexicographically smallest index set of size rank(m)
/// whose principal minor is nonzero, plus that minor. Rank 0 gives ({}, 1).
/// Such a set always exists for symmetric matrices in odd characteristic:
/// a principal submatrix on an independent column set is nonsingular.
PrincipalMinor max_nonsingular_principal(const FqMatrix& m);

}  // namespace qmatroid
