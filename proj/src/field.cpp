#include "qmatroid/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qmatroid {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// Remainder of a mod g over GF(p), coefficients low-degree first, g monic.
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& g, long p) {
  long dg = static_cast<long>(g.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= dg; --i) {
    long c = a[i] % p;
    if (c == 0) continue;
    for (long j = 0; j <= dg; ++j) {
      long& t = a[i - dg + j];
      t = ((t - c * g[j]) % p + p) % p;
    }
  }
  a.resize(std::min<std::size_t>(a.size(), dg));
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long eval_poly(const std::vector<long>& f, long x, long p) {
  long v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * x + *it) % p;
  return v;
}

// Brute-force irreducibility over GF(p): root check suffices for degree <= 3,
// trial division by all monic polynomials of degree <= d/2 otherwise.
bool is_irreducible(const std::vector<long>& f, long p) {
  long d = static_cast<long>(f.size()) - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  for (long x = 0; x < p; ++x)
    if (eval_poly(f, x, p) == 0) return false;
  if (d <= 3) return true;
  for (long k = 2; k <= d / 2; ++k) {
    long count = 1;
    for (long i = 0; i < k; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<long> g(k + 1, 0);
      long t = idx;
      for (long i = 0; i < k; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[k] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(long p) : Field(p, 1, {}) {}

Field::Field(long p, int d, std::vector<long> modulus_low_first) : p_(p), d_(d) {
  if (!is_prime(p_)) fail(ErrorKind::NotPrime, std::to_string(p_) + " is not prime");
  if (p_ % 2 == 0) fail(ErrorKind::EvenCharacteristic, "characteristic 2 is out of scope");
  if (d_ < 1) fail(ErrorKind::DegreeMismatch, "extension degree must be positive");

  q_ = 1;
  for (int i = 0; i < d_; ++i) {
    q_ *= p_;
    if (q_ > kMaxFieldOrder)
      fail(ErrorKind::FieldTooLarge, "q exceeds the desk-scale cap of " +
                                         std::to_string(kMaxFieldOrder));
  }

  if (d_ == 1) {
    if (!modulus_low_first.empty())
      fail(ErrorKind::DegreeMismatch, "prime fields take no modulus");
    return;
  }

  mod_ = std::move(modulus_low_first);
  if (static_cast<int>(mod_.size()) != d_ + 1)
    fail(ErrorKind::DegreeMismatch, "modulus must have degree " + std::to_string(d_));
  for (auto& c : mod_) c = ((c % p_) + p_) % p_;
  if (mod_.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic");
  if (!is_irreducible(mod_, p_))
    fail(ErrorKind::ReducibleModulus, "modulus factors over GF(" + std::to_string(p_) + ")");
}

Field Field::from_spec(std::string_view spec) {
  auto parse_long = [&](std::string_view s) -> long {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(ErrorKind::ParseError, "bad number in field spec: '" + std::string(s) + "'");
    return v;
  };
  auto caret = spec.find('^');
  if (caret == std::string_view::npos) return Field(parse_long(spec));

  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorKind::ParseError, "extension field spec needs ':modulus-coeffs'");
  long p = parse_long(spec.substr(0, caret));
  long d = parse_long(spec.substr(caret + 1, colon - caret - 1));
  std::vector<long> mod;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    mod.push_back(parse_long(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Field(p, static_cast<int>(d), std::move(mod));
}

Field Field::of_order(long q) {
  if (q < 3) fail(ErrorKind::InvalidQ, "field order must be at least 3");
  long p = 0;
  for (long f = 2; f * f <= q; ++f)
    if (q % f == 0) {
      p = f;
      break;
    }
  if (p == 0) return Field(q);
  int d = 0;
  long t = q;
  while (t % p == 0) {
    t /= p;
    ++d;
  }
  if (t != 1) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  if (p == 2) fail(ErrorKind::EvenCharacteristic, "characteristic 2 is out of scope");

  long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    std::vector<long> mod(d + 1, 0);
    long v = idx;
    for (int i = 0; i < d; ++i) {
      mod[i] = v % p;
      v /= p;
    }
    mod[d] = 1;
    if (is_irreducible(mod, p)) return Field(p, d, std::move(mod));
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible modulus found");  // unreachable
}

std::string Field::spec() const {
  if (d_ == 1) return std::to_string(p_);
  std::ostringstream out;
  out << p_ << '^' << d_ << ':';
  for (int i = 0; i <= d_; ++i) {
    if (i) out << ',';
    out << mod_[i];
  }
  return out.str();
}

FieldElement Field::zero() const { return FieldElement(this, std::vector<long>(d_, 0)); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const {
  std::vector<long> c(d_, 0);
  c[0] = ((v % p_) + p_) % p_;
  return FieldElement(this, std::move(c));
}

FieldElement Field::element(std::vector<long> coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_)
    fail(ErrorKind::DegreeMismatch, "too many coordinates for degree " + std::to_string(d_));
  coeffs.resize(d_, 0);
  for (auto& c : coeffs) c = ((c % p_) + p_) % p_;
  return FieldElement(this, std::move(coeffs));
}

FieldElement Field::element_at(long index) const {
  if (index < 0 || index >= q_) fail(ErrorKind::IndexOutOfRange, "element index");
  std::vector<long> c(d_, 0);
  for (int i = 0; i < d_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return FieldElement(this, std::move(c));
}

long Field::index_of(const FieldElement& x) const {
  long idx = 0;
  for (int i = d_ - 1; i >= 0; --i) idx = idx * p_ + x.coeffs()[i];
  return idx;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long v) { return v == 0; });
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (f_ == o.f_) return;
  if (f_ == nullptr || o.f_ == nullptr || *f_ != *o.f_)
    fail(ErrorKind::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  std::vector<long> r(c_.size());
  long p = f_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % p;
  return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  std::vector<long> r(c_.size());
  long p = f_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ((c_[i] - o.c_[i]) % p + p) % p;
  return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator-() const {
  std::vector<long> r(c_.size());
  long p = f_->characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (p - c_[i]) % p;
  return FieldElement(f_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  long p = f_->characteristic();
  int d = f_->degree();
  if (d == 1) return FieldElement(f_, {(c_[0] * o.c_[0]) % p});

  std::vector<long> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
  }
  const auto& m = f_->modulus();
  for (int i = 2 * d - 2; i >= d; --i) {
    long c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < d; ++j) {
      long& t = prod[i - d + j];
      t = ((t - c * m[j]) % p + p) % p;
    }
    prod[i] = 0;
  }
  prod.resize(d);
  return FieldElement(f_, std::move(prod));
}

FieldElement FieldElement::pow(unsigned long long e) const {
  FieldElement r = f_->one();
  FieldElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverting zero");
  return pow(static_cast<unsigned long long>(f_->order() - 2));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return *this * o.inv();
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

std::string FieldElement::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ',';
    out << c_[i];
  }
  return out.str();
}

int quadratic_character(const FieldElement& x) {
  if (x.is_zero()) return 0;
  FieldElement e = x.pow(static_cast<unsigned long long>((x.field().order() - 1) / 2));
  return e == x.field().one() ? 1 : -1;
}

QuadCharTable::QuadCharTable(const Field& f) {
  table_.resize(f.order());
  for (long i = 0; i < f.order(); ++i) table_[i] = quadratic_character(f.element_at(i));
}

long trace(const FieldElement& x) {
  const Field& f = x.field();
  FieldElement acc = x;
  FieldElement t = x;
  for (int i = 1; i < f.degree(); ++i) {
    t = t.pow(static_cast<unsigned long long>(f.characteristic()));
    acc = acc + t;
  }
  return acc.coeffs()[0];
}

Int count_linear_solutions(const std::vector<FieldElement>& c, const FieldElement& b,
                           std::uint64_t budget) {
  const Field& f = b.field();
  for (const auto& ci : c)
    if (ci.is_zero()) fail(ErrorKind::ZeroCoefficient, "linear form coefficients must be nonzero");

  long ell = static_cast<long>(c.size());
  check_budget(pow_int(Int(f.order() - 1), static_cast<unsigned>(ell)), budget,
               "count_linear_solutions");

  Int count = 0;
  std::vector<long> idx(ell, 1);  // indices into 1..q-1 (nonzero elements)
  std::vector<FieldElement> alpha;
  alpha.reserve(ell);
  for (long i = 0; i < ell; ++i) alpha.push_back(f.element_at(1));
  while (true) {
    FieldElement sum = f.zero();
    for (long i = 0; i < ell; ++i) sum += c[i] * alpha[i];
    if (sum == b) ++count;

    long pos = ell - 1;
    while (pos >= 0) {
      if (++idx[pos] < f.order()) {
        alpha[pos] = f.element_at(idx[pos]);
        break;
      }
      idx[pos] = 1;
      alpha[pos] = f.element_at(1);
      --pos;
    }
    if (pos < 0) break;
  }
  return count;
}

}  // namespace qmatroid
