#include "qmatroid/counting.hpp"

#include <vector>

#include "qmatroid/errors.hpp"

namespace qmatroid {

namespace {

// Walks an odometer of `len` digits in [0, radix); returns false on wrap.
bool advance(std::vector<long>& dig, long radix) {
  for (int pos = static_cast<int>(dig.size()) - 1; pos >= 0; --pos) {
    if (++dig[static_cast<std::size_t>(pos)] < radix) return true;
    dig[static_cast<std::size_t>(pos)] = 0;
  }
  return false;
}

std::vector<FieldElement> image_row(const FqMatrix& m, const std::vector<FieldElement>& x) {
  const Field& f = m.field();
  std::vector<FieldElement> y(static_cast<std::size_t>(m.cols()), f.zero());
  for (int e = 0; e < m.cols(); ++e) {
    FieldElement acc = f.zero();
    for (int i = 0; i < m.rows(); ++i) acc += x[static_cast<std::size_t>(i)] * m.at(i, e);
    y[static_cast<std::size_t>(e)] = acc;
  }
  return y;
}

}  // namespace

Int nowhere_zero_kernel_count(const RepMatroid& m, std::uint64_t budget) {
  const Field& f = m.field();
  const long q = f.order();
  const int n = m.size();
  check_budget(pow_int(Int(q - 1), static_cast<unsigned>(n)), budget,
               "nowhere_zero_kernel_count");

  Int count = 0;
  std::vector<long> dig(static_cast<std::size_t>(n), 0);
  std::vector<FieldElement> alpha(static_cast<std::size_t>(n), f.element_at(1));
  do {
    for (int i = 0; i < n; ++i)
      alpha[static_cast<std::size_t>(i)] = f.element_at(dig[static_cast<std::size_t>(i)] + 1);
    bool in_kernel = true;
    for (int i = 0; i < m.full_rank() && in_kernel; ++i) {
      FieldElement acc = f.zero();
      for (int e = 0; e < n; ++e) acc += m.matrix().at(i, e) * alpha[static_cast<std::size_t>(e)];
      in_kernel = acc.is_zero();
    }
    if (in_kernel) ++count;
  } while (advance(dig, q - 1));
  return count;
}

Int quadratic_form_count(const RepMatroid& m, int j, const FieldElement& b,
                         std::uint64_t budget) {
  if (j < 1) fail(ErrorKind::IndexOutOfRange, "the form's power must be positive");
  const Field& f = m.field();
  if (b.field() != f) fail(ErrorKind::FieldMismatch, "target value from a different field");
  const long q = f.order();
  const int r = m.full_rank();
  const int n = m.size();
  check_budget(pow_int(Int(q), static_cast<unsigned>(r)) *
                   pow_int(Int(q - 1), static_cast<unsigned>(n)),
               budget, "quadratic_form_count");

  Int count = 0;
  std::vector<long> dig(static_cast<std::size_t>(r), 0);
  std::vector<FieldElement> x(static_cast<std::size_t>(r), f.zero());
  do {
    for (int i = 0; i < r; ++i)
      x[static_cast<std::size_t>(i)] = f.element_at(dig[static_cast<std::size_t>(i)]);
    std::vector<FieldElement> y = image_row(m.matrix(), x);
    std::vector<FieldElement> coeffs;
    int zeros = 0;
    for (const auto& ye : y) {
      if (ye.is_zero())
        ++zeros;
      else
        coeffs.push_back(ye.pow(static_cast<unsigned long long>(j)));
    }
    // alpha entries on zero coefficients are free.
    count += pow_int(Int(q - 1), static_cast<unsigned>(zeros)) *
             count_linear_solutions(coeffs, b, budget);
  } while (advance(dig, q));
  return count;
}

Int chevalley_zero_count(const FqMatrix& b) {
  const Field& f = b.field();
  const Int q(f.order());
  const int n = b.rows();
  PrincipalMinor pm = max_nonsingular_principal(b);
  const int m = static_cast<int>(pm.keep.size());

  if (m == 0) return pow_int(q, static_cast<unsigned>(n));
  if (m % 2 == 1) return pow_int(q, static_cast<unsigned>(n - 1));

  FieldElement sign = (m / 2) % 2 == 1 ? -f.one() : f.one();
  int chi = quadratic_character(sign * pm.minor);
  Int bulk = pow_int(q, static_cast<unsigned>(m - 1));
  Int correction = (q - 1) * pow_int(q, static_cast<unsigned>((m - 2) / 2)) * chi;
  return pow_int(q, static_cast<unsigned>(n - m)) * (bulk + correction);
}

Int contraction_pattern_count(const RepMatroid& m, Mask a, std::uint64_t budget) {
  if ((a & ~m.full_mask()) != 0) fail(ErrorKind::IndexOutOfRange, "subset outside the ground set");
  const Field& f = m.field();
  const long q = f.order();
  const int r = m.full_rank();
  check_budget(pow_int(Int(q), static_cast<unsigned>(r)), budget, "contraction_pattern_count");

  Int count = 0;
  std::vector<long> dig(static_cast<std::size_t>(r), 0);
  std::vector<FieldElement> x(static_cast<std::size_t>(r), f.zero());
  do {
    for (int i = 0; i < r; ++i)
      x[static_cast<std::size_t>(i)] = f.element_at(dig[static_cast<std::size_t>(i)]);
    std::vector<FieldElement> y = image_row(m.matrix(), x);
    bool match = true;
    for (int e = 0; e < m.size() && match; ++e) {
      bool want_zero = (a >> e) & 1;
      match = y[static_cast<std::size_t>(e)].is_zero() == want_zero;
    }
    if (match) ++count;
  } while (advance(dig, q));
  return count;
}

}  // namespace qmatroid
