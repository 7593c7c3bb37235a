#include "qmatroid/matroid.hpp"

#include <algorithm>

namespace qmatroid {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_labels(const std::vector<std::string>& labels, int n) {
  if (static_cast<int>(labels.size()) != n)
    fail(ErrorKind::ParseError, "expected " + std::to_string(n) + " ground labels");
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::ParseError, "duplicate ground label");
}

std::vector<std::string> pick_labels(const std::vector<std::string>& labels, Mask keep) {
  std::vector<std::string> out;
  for (int i : mask_positions(keep)) out.push_back(labels[i]);
  return out;
}

// Rank axioms, exhaustive; only called for small ground sets.
void validate_rank_axioms(const std::function<int(Mask)>& r, int n) {
  Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  if (r(0) != 0) fail(ErrorKind::InvalidRankFunction, "r(empty) != 0");
  for (Mask a = 0;; ++a) {
    int ra = r(a);
    for (int e = 0; e < n; ++e) {
      if (a & (Mask{1} << e)) continue;
      int rae = r(a | (Mask{1} << e));
      if (rae < ra || rae > ra + 1)
        fail(ErrorKind::InvalidRankFunction, "unit-increase violated");
    }
    if (a == full) break;
  }
  for (Mask a = 0;; ++a) {
    for (Mask b = 0;; ++b) {
      if (r(a | b) + r(a & b) > r(a) + r(b))
        fail(ErrorKind::InvalidRankFunction, "submodularity violated");
      if (b == full) break;
    }
    if (a == full) break;
  }
}

}  // namespace

std::vector<int> mask_positions(Mask m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i)
    if (m & (Mask{1} << i)) out.push_back(i);
  return out;
}

int label_index(const std::vector<std::string>& ground, const std::string& label) {
  auto it = std::find(ground.begin(), ground.end(), label);
  if (it == ground.end()) fail(ErrorKind::UnknownLabel, "no ground element '" + label + "'");
  return static_cast<int>(it - ground.begin());
}

Mask mask_from_labels(const std::vector<std::string>& ground,
                      const std::vector<std::string>& subset) {
  Mask m = 0;
  for (const auto& l : subset) m |= Mask{1} << label_index(ground, l);
  return m;
}

RepMatroid::RepMatroid(FqMatrix matrix, std::vector<std::string> labels)
    : m_(row_reduce_full_rank(matrix)),
      labels_(labels.empty() ? default_labels(matrix.cols()) : std::move(labels)) {
  if (m_.cols() > kMaxGroundSize)
    fail(ErrorKind::IndexOutOfRange, "ground set exceeds mask capacity");
  check_labels(labels_, m_.cols());
}

int RepMatroid::rank(Mask a) const {
  if (a & ~full_mask()) fail(ErrorKind::IndexOutOfRange, "subset outside the ground set");
  return qmatroid::rank(m_.select_columns(mask_positions(a)));
}

RepMatroid RepMatroid::restrict_to(Mask a) const {
  if (a & ~full_mask()) fail(ErrorKind::IndexOutOfRange, "subset outside the ground set");
  return RepMatroid(m_.select_columns(mask_positions(a)), pick_labels(labels_, a));
}

RepMatroid RepMatroid::contract(Mask a) const {
  if (a & ~full_mask()) fail(ErrorKind::IndexOutOfRange, "subset outside the ground set");
  FqMatrix work = m_;
  std::vector<int> cols = mask_positions(a);
  // Contract highest position first so pending positions stay valid.
  std::sort(cols.rbegin(), cols.rend());
  std::vector<std::string> labels = pick_labels(labels_, full_mask() & ~a);
  const Field& f = work.field();
  for (int col : cols) {
    int pivot = -1;
    for (int i = 0; i < work.rows(); ++i)
      if (!work.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    std::vector<int> keep_cols;
    for (int j = 0; j < work.cols(); ++j)
      if (j != col) keep_cols.push_back(j);
    if (pivot < 0) {
      // Loop: contraction coincides with deletion.
      work = work.select_columns(keep_cols);
      continue;
    }
    FieldElement inv = work.at(pivot, col).inv();
    FqMatrix next(f, work.rows() - 1, work.cols() - 1);
    int ti = 0;
    for (int i = 0; i < work.rows(); ++i) {
      if (i == pivot) continue;
      FieldElement c = work.at(i, col) * inv;
      int tj = 0;
      for (int j : keep_cols) next.set(ti, tj++, work.at(i, j) - c * work.at(pivot, j));
      ++ti;
    }
    work = std::move(next);
  }
  return RepMatroid(std::move(work), std::move(labels));
}

RepMatroid RepMatroid::dual() const {
  // Standard form through the echelon pivots: the dual matrix is the identity
  // on the non-pivot columns and -D^T on the pivot columns, where D is the
  // non-pivot block of the reduced form. Column labels stay in place.
  EchelonForm ech = rref(m_);
  int r = full_rank(), n = size();
  std::vector<bool> is_pivot(n, false);
  for (int p : ech.pivot_cols) is_pivot[p] = true;
  std::vector<int> nonpivots;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) nonpivots.push_back(j);

  const Field& f = field();
  FqMatrix dmat(f, n - r, n);
  for (int i = 0; i < n - r; ++i) dmat.set(i, nonpivots[i], f.one());
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < n - r; ++i)
      dmat.set(i, ech.pivot_cols[k], -ech.mat.at(k, nonpivots[i]));
  return RepMatroid(std::move(dmat), labels_);
}

std::vector<std::pair<Mask, FieldElement>> RepMatroid::bases(std::uint64_t budget) const {
  check_budget(pow_int(2, static_cast<unsigned>(size())), budget, "basis enumeration");
  int r = full_rank();
  std::vector<std::pair<Mask, FieldElement>> out;
  if (r == 0) {
    out.emplace_back(0, field().one());
    return out;
  }
  for (Mask a = 0;; ++a) {
    if (popcount(a) == r) {
      FieldElement d = det(m_.select_columns(mask_positions(a)));
      if (!d.is_zero()) out.emplace_back(a, d);
    }
    if (a == full_mask()) break;
  }
  return out;
}

RankOracleMatroid::RankOracleMatroid(std::vector<std::string> labels,
                                     std::function<int(Mask)> rank_fn, bool validate)
    : labels_(std::move(labels)), rank_(std::move(rank_fn)) {
  if (size() > kMaxGroundSize)
    fail(ErrorKind::IndexOutOfRange, "ground set exceeds mask capacity");
  check_labels(labels_, size());
  if (validate && size() <= 10) validate_rank_axioms(rank_, size());
}

RankOracleMatroid RankOracleMatroid::uniform(int k, int n) {
  if (k < 0 || n < 0 || k > n)
    fail(ErrorKind::ParseError, "uniform matroid needs 0 <= k <= n");
  return RankOracleMatroid(
      default_labels(n), [k](Mask a) { return std::min(k, popcount(a)); }, false);
}

RankOracleMatroid RankOracleMatroid::wrap(const RepMatroid& m) {
  return RankOracleMatroid(
      m.ground(), [m](Mask a) { return m.rank(a); }, false);
}

RankOracleMatroid RankOracleMatroid::restrict_to(Mask a) const {
  if (a & ~full_mask()) fail(ErrorKind::IndexOutOfRange, "subset outside the ground set");
  std::vector<int> pos = mask_positions(a);
  auto parent = rank_;
  auto lift = [pos, parent](Mask x) {
    Mask big = 0;
    for (int i = 0; i < static_cast<int>(pos.size()); ++i)
      if (x & (Mask{1} << i)) big |= Mask{1} << pos[i];
    return parent(big);
  };
  return RankOracleMatroid(pick_labels(labels_, a), std::move(lift), false);
}

RankOracleMatroid RankOracleMatroid::contract(Mask a) const {
  if (a & ~full_mask()) fail(ErrorKind::IndexOutOfRange, "subset outside the ground set");
  std::vector<int> pos = mask_positions(full_mask() & ~a);
  auto parent = rank_;
  int base = rank_(a);
  auto contracted = [pos, parent, a, base](Mask x) {
    Mask big = a;
    for (int i = 0; i < static_cast<int>(pos.size()); ++i)
      if (x & (Mask{1} << i)) big |= Mask{1} << pos[i];
    return parent(big) - base;
  };
  return RankOracleMatroid(pick_labels(labels_, full_mask() & ~a), std::move(contracted),
                           false);
}

RankOracleMatroid RankOracleMatroid::dual() const {
  // r*(A) = |A| + r(E \ A) - r(E); matches the matrix construction used by
  // RepMatroid::dual and is an involution.
  auto parent = rank_;
  Mask full = full_mask();
  int total = rank_(full);
  auto dual_rank = [parent, full, total](Mask x) {
    return popcount(x) + parent(full & ~x) - total;
  };
  return RankOracleMatroid(labels_, std::move(dual_rank), false);
}

}  // namespace qmatroid
