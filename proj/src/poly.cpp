#include "qmatroid/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qmatroid {

namespace {

const Int kZero = 0;

// Term rendering shared by both polynomial printers. `vars` is the variable
// part ("", "x", "x^2", "xy^2", ...). Writes sign + magnitude.
void append_term(std::ostringstream& out, bool first, const Int& coeff, const std::string& vars) {
  Int mag = coeff < 0 ? Int(-coeff) : coeff;
  if (first) {
    if (coeff < 0) out << '-';
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  if (mag != 1 || vars.empty()) out << mag.str();
  out << vars;
}

std::string power_str(const char* var, int deg) {
  if (deg == 0) return "";
  if (deg == 1) return var;
  return std::string(var) + "^" + std::to_string(deg);
}

}  // namespace

UniPoly::UniPoly(std::vector<Int> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Int c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::x() { return UniPoly({0, 1}); }

const Int& UniPoly::coeff(int deg) const {
  if (deg < 0 || deg >= static_cast<int>(c_.size())) return kZero;
  return c_[deg];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Int> r = c_;
  for (auto& v : r) v = -v;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Int& k) const {
  std::vector<Int> r = c_;
  for (auto& v : r) v *= k;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = UniPoly::constant(1);
  UniPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Int UniPoly::eval(const Int& x) const {
  Int v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Rat UniPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
  return v;
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    if (c_[d] == 0) continue;
    append_term(out, first, c_[d], power_str("x", d));
    first = false;
  }
  return out.str();
}

UniPoly interpolate(const std::vector<std::pair<Int, Int>>& points) {
  // Newton divided differences in exact rationals, then expand and check the
  // result has integer coefficients (it must, given the stated precondition).
  std::size_t n = points.size();
  if (n == 0) return UniPoly();
  std::vector<Rat> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = Rat(points[i].second);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Int dx = points[i].first - points[i - level].first;
      if (dx == 0) fail(ErrorKind::ParseError, "repeated interpolation node");
      coef[i] = (coef[i] - coef[i - 1]) / Rat(dx);
      if (i == level) break;
    }

  // Horner-style expansion of the Newton form.
  std::vector<Rat> acc = {coef[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // acc := acc * (x - x_i) + coef[i]
    std::vector<Rat> next(acc.size() + 1, Rat(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * Rat(points[i].first);
    }
    next[0] += coef[i];
    acc = std::move(next);
  }

  std::vector<Int> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (denominator(acc[i]) != 1)
      fail(ErrorKind::DegreeMismatch, "interpolation data is not polynomial-integral");
    out[i] = numerator(acc[i]);
  }
  return UniPoly(std::move(out));
}

const Int& BiPoly::coeff(int du, int dv) const {
  auto it = t_.find({du, dv});
  return it == t_.end() ? kZero : it->second;
}

void BiPoly::add_term(int du, int dv, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace({du, dv}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly BiPoly::operator*(const Int& k) const {
  BiPoly r;
  for (const auto& [key, c] : t_) r.add_term(key.first, key.second, c * k);
  return r;
}

Rat BiPoly::eval(const Rat& u, const Rat& v) const {
  Rat total = 0;
  for (const auto& [key, c] : t_) {
    if (key.second < 0 && v == 0)
      fail(ErrorKind::ZeroArgument, "negative v-power evaluated at v = 0");
    total += Rat(c) * pow_rat(u, key.first) * pow_rat(v, key.second);
  }
  return total;
}

BiPoly BiPoly::shift(const Int& du, const Int& dv) const {
  BiPoly r;
  for (const auto& [key, c] : t_) {
    auto [eu, ev] = key;
    if (eu < 0 || ev < 0)
      fail(ErrorKind::DegreeMismatch, "shift needs non-negative exponents");
    // (u+du)^eu expanded by running binomials.
    std::vector<Int> ucoef(eu + 1);  // coefficient of u^i
    Int bin = 1;
    for (int i = eu; i >= 0; --i) {
      ucoef[i] = bin * pow_int(du, static_cast<unsigned>(eu - i));
      if (i > 0) bin = bin * i / (eu - i + 1);
    }
    std::vector<Int> vcoef(ev + 1);
    bin = 1;
    for (int j = ev; j >= 0; --j) {
      vcoef[j] = bin * pow_int(dv, static_cast<unsigned>(ev - j));
      if (j > 0) bin = bin * j / (ev - j + 1);
    }
    for (int i = 0; i <= eu; ++i)
      for (int j = 0; j <= ev; ++j) r.add_term(i, j, c * ucoef[i] * vcoef[j]);
  }
  return r;
}

UniPoly BiPoly::eval_u(const Int& u0) const {
  std::vector<Int> out;
  for (const auto& [key, c] : t_) {
    auto [eu, ev] = key;
    if (ev < 0) fail(ErrorKind::DegreeMismatch, "Laurent part has no univariate form");
    if (static_cast<int>(out.size()) <= ev) out.resize(ev + 1, 0);
    out[ev] += c * pow_int(u0, static_cast<unsigned>(eu));
  }
  return UniPoly(std::move(out));
}

UniPoly BiPoly::eval_v(const Int& v0) const {
  std::vector<Int> out;
  for (const auto& [key, c] : t_) {
    auto [eu, ev] = key;
    if (ev < 0) fail(ErrorKind::DegreeMismatch, "Laurent part has no univariate form");
    if (static_cast<int>(out.size()) <= eu) out.resize(eu + 1, 0);
    out[eu] += c * pow_int(v0, static_cast<unsigned>(ev));
  }
  return UniPoly(std::move(out));
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Int>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    std::string vars = power_str("x", key.first);
    if (key.second != 0) {
      if (key.second == 1)
        vars += "y";
      else
        vars += "y^" + std::to_string(key.second);
    }
    append_term(out, first, c, vars);
    first = false;
  }
  return out.str();
}

}  // namespace qmatroid
