#include "qmatroid/fq_matrix.hpp"

#include <sstream>

namespace qmatroid {

FqMatrix::FqMatrix(const Field& f, int rows, int cols) : f_(&f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(ErrorKind::IndexOutOfRange, "negative dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, f.zero());
}

FqMatrix FqMatrix::identity(const Field& f, int n) {
  FqMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

FqMatrix FqMatrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  FqMatrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(ErrorKind::IndexOutOfRange, "ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, f.from_int(rows[i][j]));
  }
  return m;
}

std::size_t FqMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    fail(ErrorKind::IndexOutOfRange,
         "entry (" + std::to_string(r) + "," + std::to_string(c) + ") of a " +
             std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  return static_cast<std::size_t>(r) * cols_ + c;
}

void FqMatrix::set(int r, int c, const FieldElement& v) {
  if (v.field() != *f_) fail(ErrorKind::FieldMismatch, "entry from a different field");
  e_[index(r, c)] = v;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(*f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (*f_ != *o.f_) fail(ErrorKind::FieldMismatch, "matrix product across fields");
  if (cols_ != o.rows_)
    fail(ErrorKind::IndexOutOfRange, "inner dimensions " + std::to_string(cols_) + " vs " +
                                         std::to_string(o.rows_));
  FqMatrix r(*f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      FieldElement acc = f_->zero();
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.set(i, j, acc);
    }
  return r;
}

FqMatrix FqMatrix::select_rows(const std::vector<int>& idx) const {
  FqMatrix r(*f_, static_cast<int>(idx.size()), cols_);
  for (int i = 0; i < static_cast<int>(idx.size()); ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(idx[i], j));
  return r;
}

FqMatrix FqMatrix::select_columns(const std::vector<int>& idx) const {
  FqMatrix r(*f_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < static_cast<int>(idx.size()); ++j) r.set(i, j, at(i, idx[j]));
  return r;
}

FqMatrix FqMatrix::scale_columns(const std::vector<FieldElement>& s) const {
  if (static_cast<int>(s.size()) != cols_)
    fail(ErrorKind::IndexOutOfRange, "need one scale per column");
  FqMatrix r(*f_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * s[j]);
  return r;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
  if (*f_ != *o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

std::string FqMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j).str();
    }
    out << "]\n";
  }
  return out.str();
}

EchelonForm rref(const FqMatrix& m) {
  FqMatrix a = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < a.cols(); ++j) {
        FieldElement t = a.at(row, j);
        a.set(row, j, a.at(sel, j));
        a.set(sel, j, t);
      }
    FieldElement inv = a.at(row, col).inv();
    for (int j = 0; j < a.cols(); ++j) a.set(row, j, a.at(row, j) * inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      FieldElement c = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j) a.set(i, j, a.at(i, j) - c * a.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const FqMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

FieldElement det(const FqMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const Field& f = m.field();
  int n = m.rows();
  if (n == 0) return f.one();

  FqMatrix a = m;
  FieldElement d = f.one();
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return f.zero();
    if (sel != col) {
      for (int j = 0; j < n; ++j) {
        FieldElement t = a.at(col, j);
        a.set(col, j, a.at(sel, j));
        a.set(sel, j, t);
      }
      d = -d;
    }
    d = d * a.at(col, col);
    FieldElement inv = a.at(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      FieldElement c = a.at(i, col) * inv;
      for (int j = col; j < n; ++j) a.set(i, j, a.at(i, j) - c * a.at(col, j));
    }
  }
  return d;
}

FqMatrix row_reduce_full_rank(const FqMatrix& m) {
  // Incremental elimination; a row survives iff it falls outside the span of
  // the survivors before it.
  std::vector<std::vector<FieldElement>> basis;  // reduced survivor rows
  std::vector<int> basis_pivot;                  // leading column of each
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<FieldElement> v;
    v.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      FieldElement c = v[basis_pivot[b]];
      if (c.is_zero()) continue;
      for (int j = 0; j < m.cols(); ++j) v[j] -= c * basis[b][j];
    }
    int lead = -1;
    for (int j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    FieldElement inv = v[lead].inv();
    for (int j = 0; j < m.cols(); ++j) v[j] *= inv;
    // Keep the eliminator reduced above the new pivot too.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      FieldElement c = basis[b][lead];
      if (c.is_zero()) continue;
      for (int j = 0; j < m.cols(); ++j) basis[b][j] -= c * v[j];
    }
    basis.push_back(std::move(v));
    basis_pivot.push_back(lead);
    keep.push_back(i);
  }
  return m.select_rows(keep);
}

FqMatrix principal_submatrix(const FqMatrix& m, const std::vector<int>& keep) {
  if (m.rows() != m.cols())
    fail(ErrorKind::NotSquare, "principal submatrix of a non-square matrix");
  for (int i : keep)
    if (i < 0 || i >= m.rows()) fail(ErrorKind::IndexOutOfRange, "keep index " + std::to_string(i));
  return m.select_rows(keep).select_columns(keep);
}

PrincipalMinor max_nonsingular_principal(const FqMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::NotSquare, "needs a square matrix");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m.at(i, j) != m.at(j, i)) fail(ErrorKind::NotSymmetric, "matrix is not symmetric");

  // For symmetric m the principal submatrix on any maximal independent column
  // set is nonsingular, and greedy left-to-right selection yields the
  // lexicographically smallest such set.
  std::vector<int> keep;
  int r = 0;
  for (int j = 0; j < m.cols(); ++j) {
    std::vector<int> trial = keep;
    trial.push_back(j);
    FqMatrix cols = m.select_columns(trial);
    if (rank(cols) > r) {
      keep = std::move(trial);
      ++r;
    }
  }
  FieldElement minor = det(principal_submatrix(m, keep));
  return {std::move(keep), std::move(minor)};
}

}  // namespace qmatroid
