#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qmatroid/budget.hpp"
#include "qmatroid/errors.hpp"
#include "qmatroid/numeric.hpp"

namespace qmatroid {

class FieldElement;

/// GF(p^d) for an odd prime p, elements in the polynomial basis modulo a monic
/// irreducible modulus. Immutable after construction; FieldElement keeps a
/// non-owning pointer, so a Field must outlive its elements.
///
/// Only desk-scale fields are supported (q <= kMaxFieldOrder); the modulus is
/// validated by brute force at construction.
class Field {
 public:
  static constexpr long kMaxFieldOrder = 10'000;

  explicit Field(long p);
  Field(long p, int d, std::vector<long> modulus_low_first);

  /// Parses "5" or "3^2:1,0,1" (modulus coefficients low-degree first).
  static Field from_spec(std::string_view spec);
  /// GF(q) with a deterministic modulus: the lexicographically smallest monic
  /// irreducible of the right degree.
  static Field of_order(long q);

  long characteristic() const { return p_; }
  int degree() const { return d_; }
  long order() const { return q_; }
  const std::vector<long>& modulus() const { return mod_; }
  std::string spec() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement element(std::vector<long> coeffs) const;

  /// Elements indexed 0..q-1 by base-p coefficient digits; index 0 is zero,
  /// so 1..q-1 enumerates the multiplicative group.
  FieldElement element_at(long index) const;
  long index_of(const FieldElement& x) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && d_ == o.d_ && mod_ == o.mod_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  long p_ = 0;
  int d_ = 0;
  long q_ = 0;
  std::vector<long> mod_;  // size d+1, monic; empty for d == 1
};

/// Element of a Field in canonical reduced form: d coordinates in {0..p-1}.
/// Equality is coordinate equality. All operations are pure.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const { return *f_; }
  const std::vector<long>& coeffs() const { return c_; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const;
  FieldElement pow(unsigned long long e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// "3" for prime fields, "1,2" (low-degree first) for extensions.
  std::string str() const;

 private:
  friend class Field;
  FieldElement(const Field* f, std::vector<long> c) : f_(f), c_(std::move(c)) {}
  void check_same_field(const FieldElement& o) const;

  const Field* f_ = nullptr;
  std::vector<long> c_;
};

/// Multiplicative quadratic character: 0 at zero, +1 on nonzero squares,
/// -1 otherwise. Euler criterion x^((q-1)/2).
int quadratic_character(const FieldElement& x);

/// Cached quadratic character values for one field, for enumeration loops.
/// Built with the same Euler criterion it replaces in the hot path.
class QuadCharTable {
 public:
  explicit QuadCharTable(const Field& f);
  int operator()(const FieldElement& x) const { return table_[x.field().index_of(x)]; }
  int at_index(long idx) const { return table_[idx]; }

 private:
  std::vector<int> table_;
};

/// Trace into the prime subfield: x + x^p + ... + x^(p^(d-1)), returned as a
/// residue mod p.
long trace(const FieldElement& x);

/// Number of alpha in (F_q^*)^len(c) with sum_i c_i alpha_i = b, by exhaustive
/// enumeration. All c_i must be nonzero.
Int count_linear_solutions(const std::vector<FieldElement>& c, const FieldElement& b,
                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace qmatroid
