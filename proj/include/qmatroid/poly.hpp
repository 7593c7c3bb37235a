#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmatroid/errors.hpp"
#include "qmatroid/numeric.hpp"

namespace qmatroid {

/// Univariate polynomial with exact integer coefficients, stored by degree
/// with no trailing zeros. degree() of the zero polynomial is the -1 sentinel
/// (standing in for -infinity).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs_low_first);
  static UniPoly constant(Int c);
  static UniPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& coeff(int deg) const;
  const std::vector<Int>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const Int& k) const;
  UniPoly pow(unsigned e) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  /// Canonical rendering, highest degree first: "x^2 - 4x + 3", "x - 1", "0".
  std::string str() const;

 private:
  std::vector<Int> c_;
};

/// Exact interpolation through (x_i, y_i) with distinct x_i. The data must
/// come from an integer-coefficient polynomial of degree < #points.
UniPoly interpolate(const std::vector<std::pair<Int, Int>>& points);

/// Bivariate polynomial with exact integer coefficients, sparse over
/// (degree_u, degree_v). degree_v may be negative (Laurent in v) to keep the
/// dichromatic normalization robust; degree_u is always >= 0 here.
class BiPoly {
 public:
  BiPoly() = default;

  const Int& coeff(int du, int dv) const;
  void add_term(int du, int dv, const Int& c);
  const std::map<std::pair<int, int>, Int>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Int& k) const;
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  /// Exact evaluation; negative v-exponents need v != 0 (ZeroArgument).
  Rat eval(const Rat& u, const Rat& v) const;

  /// P(u + du, v + dv) by binomial expansion; requires non-negative exponents.
  BiPoly shift(const Int& du, const Int& dv) const;

  /// Partial evaluation to a univariate polynomial; requires non-negative
  /// exponents in the evaluated variable.
  UniPoly eval_u(const Int& u0) const;  // polynomial in v
  UniPoly eval_v(const Int& v0) const;  // polynomial in u

  /// Rendering with variables x (= u) and y (= v), sorted by x-degree
  /// descending then y-degree ascending: "x^2 + 2x + 2y + y^2".
  std::string str() const;

 private:
  std::map<std::pair<int, int>, Int> t_;
};

}  // namespace qmatroid
