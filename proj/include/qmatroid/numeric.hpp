#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qmatroid {

// Exact arithmetic carriers. Every polynomial coefficient and every identity
// evaluation in the library is an Int or a Rat; there is no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(const Int& base, unsigned e) {
  Int r = 1;
  Int b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e >= 0) {
    Rat r = 1, b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }
  return 1 / pow_rat(base, -e);
}

inline std::string to_string(const Rat& r) { return r.str(); }

// Two sides of an identity, evaluated exactly. Callers decide what to do
// with a mismatch; holds() is the whole verdict.
struct IdentityCheck {
  Rat lhs;
  Rat rhs;
  bool holds() const { return lhs == rhs; }
};

inline Rat rat_from_string(const std::string& s) { return Rat(s); }

}  // namespace qmatroid
