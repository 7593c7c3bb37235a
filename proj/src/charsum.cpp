#include "qmatroid/charsum.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "qmatroid/catalog.hpp"
#include "qmatroid/errors.hpp"

namespace qmatroid {

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

AlphaVector::AlphaVector(const Field& f, std::vector<FieldElement> values)
    : f_(&f), values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v.field() != f) fail(ErrorKind::FieldMismatch, "alpha entry from a different field");
    if (v.is_zero()) fail(ErrorKind::ZeroCoefficient, "alpha entries must be nonzero");
  }
}

AlphaVector AlphaVector::ones(const Field& f, int n) {
  if (n < 0) fail(ErrorKind::IndexOutOfRange, "negative alpha length");
  return AlphaVector(f, std::vector<FieldElement>(static_cast<std::size_t>(n), f.one()));
}

AlphaVector AlphaVector::from_ints(const Field& f, const std::vector<long>& values) {
  std::vector<FieldElement> v;
  v.reserve(values.size());
  for (long x : values) v.push_back(f.from_int(x));
  return AlphaVector(f, std::move(v));
}

const FieldElement& AlphaVector::at(int i) const {
  if (i < 0 || i >= size()) fail(ErrorKind::IndexOutOfRange, "alpha index out of range");
  return values_[static_cast<std::size_t>(i)];
}

FieldElement matrix_basis_sum(const FqMatrix& m, const AlphaVector& alpha, std::uint64_t budget) {
  const Field& f = m.field();
  if (alpha.field() != f) fail(ErrorKind::FieldMismatch, "alpha field differs from matrix field");
  if (alpha.size() != m.cols())
    fail(ErrorKind::DegreeMismatch, "alpha length must equal the column count");
  const int r = m.rows(), n = m.cols();
  if (r > n) return f.zero();
  check_budget(binomial(n, r), budget, "matrix_basis_sum");

  FieldElement acc = f.zero();
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    FieldElement d = det(m.select_columns(idx));
    if (!d.is_zero()) {
      FieldElement term = d * d;
      for (int c : idx) term *= alpha.at(c);
      acc += term;
    }
    int pos = r - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - r + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < r; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return acc;
}

FieldElement basis_sum(const RepMatroid& m, const AlphaVector& alpha, std::uint64_t budget) {
  const Field& f = m.field();
  if (alpha.field() != f) fail(ErrorKind::FieldMismatch, "alpha field differs from matroid field");
  if (alpha.size() != m.size())
    fail(ErrorKind::DegreeMismatch, "alpha length must equal the ground size");

  FieldElement acc = f.zero();
  for (const auto& [mask, d] : m.bases(budget)) {
    FieldElement term = d * d;
    for (int e : mask_positions(mask)) term *= alpha.at(e);
    acc += term;
  }
  return acc;
}

FqMatrix weighted_laplacian(const RepMatroid& m, const AlphaVector& alpha) {
  if (alpha.field() != m.field())
    fail(ErrorKind::FieldMismatch, "alpha field differs from matroid field");
  if (alpha.size() != m.size())
    fail(ErrorKind::DegreeMismatch, "alpha length must equal the ground size");
  return m.matrix().scale_columns(alpha.values()) * m.matrix().transpose();
}

LaplacianProfile laplacian_profile(const RepMatroid& m, const AlphaVector& alpha,
                                   ProfileStrategy strategy, std::uint64_t budget) {
  const int r = m.full_rank();
  if (strategy == ProfileStrategy::Shortcut) {
    PrincipalMinor pm = max_nonsingular_principal(weighted_laplacian(m, alpha));
    std::vector<char> kept(static_cast<std::size_t>(r), 0);
    for (int k : pm.keep) kept[static_cast<std::size_t>(k)] = 1;
    std::vector<int> dropped;
    for (int i = 0; i < r; ++i)
      if (!kept[static_cast<std::size_t>(i)]) dropped.push_back(i);
    return {std::move(dropped), static_cast<int>(pm.keep.size()), pm.minor};
  }

  // Literal search: smallest deletion sets first, lexicographic within a size.
  // Terminates at worst when every row is gone (the empty minor is 1).
  for (int drop = 0; drop <= r; ++drop) {
    for (Mask w = 0; w < (Mask{1} << r); ++w) {
      if (popcount(w) != drop) continue;
      std::vector<int> keep;
      for (int i = 0; i < r; ++i)
        if (!(w & (Mask{1} << i))) keep.push_back(i);
      FieldElement s = matrix_basis_sum(m.matrix().select_rows(keep), alpha, budget);
      if (!s.is_zero()) return {mask_positions(w), r - drop, s};
    }
  }
  fail(ErrorKind::EnumerationBudgetExceeded, "row deletion search exhausted");
}

Rat gauss_weight(const Field& f, int n, GaussConvention convention) {
  if (n < 0) fail(ErrorKind::IndexOutOfRange, "gauss_weight needs n >= 0");
  if (n == 0) return Rat(1);
  if (n % 2 == 1) return Rat(0);
  long sign_source =
      convention == GaussConvention::Characteristic ? f.characteristic() : f.order();
  Rat out = Rat(1) / Rat(pow_int(Int(f.order()), static_cast<unsigned>(n / 2)));
  if (sign_source % 4 == 3 && (n / 2) % 2 == 1) out = -out;
  return out;
}

CharsumResult dual_char_charsum(const RepMatroid& m, GaussConvention convention,
                                ProfileStrategy strategy, std::uint64_t budget, int workers) {
  const Field& f = m.field();
  const long q = f.order();
  const int n = m.size();
  const int r = m.full_rank();

  Int total_big = pow_int(Int(q - 1), static_cast<unsigned>(n));
  check_budget(total_big, budget, "dual_char_charsum");
  const std::uint64_t total = total_big.convert_to<std::uint64_t>();

  std::vector<Rat> weight(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) weight[static_cast<std::size_t>(k)] = gauss_weight(f, k, convention);
  QuadCharTable eta(f);

  struct Local {
    Rat value;
    std::vector<std::uint64_t> hist;
  };
  int nw = std::clamp(workers, 1, 64);
  if (static_cast<std::uint64_t>(nw) > total) nw = static_cast<int>(total);

  std::vector<Local> locals;
  for (int i = 0; i < nw; ++i)
    locals.push_back({Rat(0), std::vector<std::uint64_t>(static_cast<std::size_t>(r) + 1, 0)});

  auto run = [&](std::uint64_t lo, std::uint64_t hi, Local& out) {
    std::vector<long> dig(static_cast<std::size_t>(n), 0);
    std::uint64_t rem = lo;
    for (int i = n - 1; i >= 0; --i) {
      dig[static_cast<std::size_t>(i)] = static_cast<long>(rem % static_cast<std::uint64_t>(q - 1));
      rem /= static_cast<std::uint64_t>(q - 1);
    }
    std::vector<FieldElement> vals;
    vals.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vals.push_back(f.element_at(dig[static_cast<std::size_t>(i)] + 1));

    for (std::uint64_t t = lo; t < hi; ++t) {
      LaplacianProfile p = laplacian_profile(m, AlphaVector(f, vals), strategy, budget);
      out.value += eta(p.minor) >= 0 ? weight[static_cast<std::size_t>(p.rank)]
                                     : -weight[static_cast<std::size_t>(p.rank)];
      ++out.hist[static_cast<std::size_t>(p.rank)];

      int pos = n - 1;
      while (pos >= 0) {
        auto i = static_cast<std::size_t>(pos);
        if (++dig[i] < q - 1) {
          vals[i] = f.element_at(dig[i] + 1);
          break;
        }
        dig[i] = 0;
        vals[i] = f.element_at(1);
        --pos;
      }
    }
  };

  if (nw == 1) {
    run(0, total, locals[0]);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) {
      std::uint64_t lo = total * static_cast<std::uint64_t>(i) / static_cast<std::uint64_t>(nw);
      std::uint64_t hi = total * static_cast<std::uint64_t>(i + 1) / static_cast<std::uint64_t>(nw);
      pool.emplace_back(run, lo, hi, std::ref(locals[static_cast<std::size_t>(i)]));
    }
    for (auto& t : pool) t.join();
  }

  CharsumResult res{Rat(0), std::vector<std::uint64_t>(static_cast<std::size_t>(r) + 1, 0)};
  for (const auto& l : locals) {
    res.value += l.value;
    for (int k = 0; k <= r; ++k)
      res.rank_histogram[static_cast<std::size_t>(k)] += l.hist[static_cast<std::size_t>(k)];
  }
  return res;
}

bool u24_columns_pairwise_independent(const Field& f) {
  FqMatrix u = catalog::u24_matrix(f);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (det(u.select_columns({i, j})).is_zero()) return false;
  return true;
}

ReducedCheckResult u24_reduced_identity(const Field& f, GaussConvention convention,
                                        std::uint64_t budget) {
  const long q = f.order();
  FqMatrix u = catalog::u24_matrix(f);
  check_budget(pow_int(Int(q - 1), 4), budget, "u24_reduced_identity");
  QuadCharTable eta(f);

  long long sum = 0;
  std::vector<long> dig(4, 0);
  std::vector<FieldElement> vals(4, f.element_at(1));
  while (true) {
    sum += eta(matrix_basis_sum(u, AlphaVector(f, vals), budget));
    int pos = 3;
    while (pos >= 0) {
      auto i = static_cast<std::size_t>(pos);
      if (++dig[i] < q - 1) {
        vals[i] = f.element_at(dig[i] + 1);
        break;
      }
      dig[i] = 0;
      vals[i] = f.element_at(1);
      --pos;
    }
    if (pos < 0) break;
  }

  ReducedCheckResult out;
  out.pairwise_independent = u24_columns_pairwise_independent(f);
  out.lhs = Rat((q - 1) * (q - 4));
  out.rhs = gauss_weight(f, 2, convention) * Rat(sum);
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace qmatroid
