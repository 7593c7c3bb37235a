#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmatroid/field.hpp"

#include <functional>

using namespace qmatroid;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("prime field construction and validation") {
  Field f5(5);
  CHECK(f5.characteristic() == 5);
  CHECK(f5.degree() == 1);
  CHECK(f5.order() == 5);
  CHECK(f5.spec() == "5");

  CHECK(kind_of([] { Field f(4); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field f(9); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field f(1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field f(2); }) == ErrorKind::EvenCharacteristic);
}

TEST_CASE("extension field construction and validation") {
  Field f9(3, 2, {1, 0, 1});  // t^2 + 1
  CHECK(f9.order() == 9);
  CHECK(f9.spec() == "3^2:1,0,1");

  // t^2 - 1 and t^2 both factor over GF(3).
  CHECK(kind_of([] { Field f(3, 2, {2, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { Field f(3, 2, {0, 0, 1}); }) == ErrorKind::ReducibleModulus);
  // -1 is a square mod 5, so t^2 + 1 splits there.
  CHECK(kind_of([] { Field f(5, 2, {1, 0, 1}); }) == ErrorKind::ReducibleModulus);

  CHECK(kind_of([] { Field f(3, 2, {1, 0, 1, 0}); }) == ErrorKind::DegreeMismatch);
  CHECK(kind_of([] { Field f(3, 2, {1, 0, 2}); }) == ErrorKind::DegreeMismatch);  // not monic
  CHECK(kind_of([] { Field f(3, 0, {}); }) == ErrorKind::DegreeMismatch);
  CHECK(kind_of([] { Field f(101, 2, {1, 0, 1}); }) == ErrorKind::FieldTooLarge);
}

TEST_CASE("field spec round trips") {
  CHECK(Field::from_spec("5").order() == 5);
  CHECK(Field::from_spec("3^2:1,0,1").spec() == "3^2:1,0,1");
  CHECK(Field::from_spec("3^2:1,0,1") == Field(3, 2, {1, 0, 1}));
  CHECK(kind_of([] { Field::from_spec("3^2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Field::from_spec("abc"); }) == ErrorKind::ParseError);
}

TEST_CASE("of_order picks deterministic moduli") {
  CHECK(Field::of_order(7).spec() == "7");
  CHECK(Field::of_order(9).modulus() == std::vector<long>{1, 0, 1});
  CHECK(Field::of_order(25).modulus() == std::vector<long>{2, 0, 1});
  CHECK(Field::of_order(27).degree() == 3);
  CHECK(Field::of_order(27).order() == 27);

  CHECK(kind_of([] { Field::of_order(6); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field::of_order(8); }) == ErrorKind::EvenCharacteristic);
  CHECK(kind_of([] { Field::of_order(2); }) == ErrorKind::InvalidQ);
  CHECK(kind_of([] { Field::of_order(10007); }) == ErrorKind::FieldTooLarge);
}

TEST_CASE("GF(5) arithmetic") {
  Field f(5);
  CHECK(f.from_int(2) * f.from_int(3) == f.one());
  CHECK(f.from_int(2).inv() == f.from_int(3));
  CHECK(f.from_int(4) + f.from_int(3) == f.from_int(2));
  CHECK(f.from_int(-1) == f.from_int(4));
  CHECK((-f.from_int(2)) == f.from_int(3));
  CHECK(f.from_int(4) / f.from_int(2) == f.from_int(2));
  CHECK(f.from_int(3).pow(0) == f.one());
  CHECK(f.from_int(2).pow(4) == f.one());
  CHECK(f.from_int(7) == f.from_int(2));
  CHECK(f.from_int(3).str() == "3");

  CHECK(kind_of([&] { f.zero().inv(); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { (void)(f.one() / f.zero()); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("GF(9) arithmetic in the t^2+1 basis") {
  Field f(3, 2, {1, 0, 1});
  FieldElement t = f.element({0, 1});
  CHECK(t * t == f.from_int(2));  // t^2 = -1
  CHECK((t + t + t).is_zero());
  CHECK(t.pow(8) == f.one());
  CHECK(t.pow(4) == f.one());
  CHECK(t.inv() * t == f.one());
  CHECK(t.str() == "0,1");
  CHECK(f.element({4, -1}) == f.element({1, 2}));

  CHECK(kind_of([&] { f.element({1, 2, 1}); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("mixing fields is rejected") {
  Field f5(5), f7(7);
  CHECK(kind_of([&] { (void)(f5.one() + f7.one()); }) == ErrorKind::FieldMismatch);
  Field g9a(3, 2, {1, 0, 1}), g9b(3, 2, {2, 2, 1});
  CHECK(kind_of([&] { (void)(g9a.one() * g9b.one()); }) == ErrorKind::FieldMismatch);
  // Same field constructed twice is fine even though the pointers differ.
  Field h(5);
  CHECK(f5.from_int(2) + h.from_int(3) == h.zero());
}

TEST_CASE("element_at and index_of are inverse bijections") {
  for (long q : {5L, 9L, 27L}) {
    Field f = Field::of_order(q);
    CHECK(f.element_at(0).is_zero());
    for (long i = 0; i < q; ++i) {
      CHECK(f.index_of(f.element_at(i)) == i);
      if (i > 0) CHECK_FALSE(f.element_at(i).is_zero());
    }
    CHECK(kind_of([&] { f.element_at(q); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { f.element_at(-1); }) == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (long q : {3L, 5L, 7L, 9L}) {
    CAPTURE(q);
    Field f = Field::of_order(q);
    for (long i = 0; i < q; ++i) {
      FieldElement a = f.element_at(i);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
      for (long j = 0; j < q; ++j) {
        FieldElement b = f.element_at(j);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (long k = 0; k < q; ++k) {
          FieldElement c = f.element_at(k);
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("quadratic character on GF(5)") {
  Field f(5);
  CHECK(quadratic_character(f.zero()) == 0);
  CHECK(quadratic_character(f.one()) == 1);
  CHECK(quadratic_character(f.from_int(2)) == -1);
  CHECK(quadratic_character(f.from_int(3)) == -1);
  CHECK(quadratic_character(f.from_int(4)) == 1);
}

TEST_CASE("quadratic character is multiplicative and balanced") {
  for (long q : {3L, 5L, 7L, 9L, 11L, 25L}) {
    CAPTURE(q);
    Field f = Field::of_order(q);
    QuadCharTable eta(f);
    int sum = 0;
    long squares = 0;
    for (long i = 0; i < q; ++i) {
      FieldElement x = f.element_at(i);
      CHECK(eta(x) == quadratic_character(x));
      CHECK(eta.at_index(i) == eta(x));
      sum += eta(x);
      if (eta(x) == 1) ++squares;
      for (long j = 1; j < q; ++j) {
        if (i == 0) break;
        FieldElement y = f.element_at(j);
        CHECK(eta(x * y) == eta(x) * eta(y));
      }
    }
    CHECK(sum == 0);
    CHECK(squares == (q - 1) / 2);
    // eta(-1) is decided by q mod 4.
    CHECK(eta(-f.one()) == (q % 4 == 1 ? 1 : -1));
  }
}

TEST_CASE("trace maps into the prime subfield") {
  Field f9(3, 2, {1, 0, 1});
  CHECK(trace(f9.one()) == 2);
  CHECK(trace(f9.element({0, 1})) == 0);

  Field f5(5);
  for (long i = 0; i < 5; ++i) CHECK(trace(f5.element_at(i)) == i);

  for (long q : {9L, 27L, 25L}) {
    CAPTURE(q);
    Field f = Field::of_order(q);
    long p = f.characteristic();
    // Additivity and F_p-linearity, exhaustively.
    for (long i = 0; i < q; ++i) {
      FieldElement x = f.element_at(i);
      for (long j = 0; j < q; ++j) {
        FieldElement y = f.element_at(j);
        CHECK(trace(x + y) == (trace(x) + trace(y)) % p);
      }
      for (long c = 0; c < p; ++c)
        CHECK(trace(f.from_int(c) * x) == (c * trace(x)) % p);
    }
    // The trace form is nondegenerate, so each fiber has size q/p.
    long zeros = 0;
    for (long i = 0; i < q; ++i)
      if (trace(f.element_at(i)) == 0) ++zeros;
    CHECK(zeros == q / p);
  }
}

TEST_CASE("nonzero-coordinate linear solution counts, small cases") {
  Field f3(3);
  CHECK(count_linear_solutions({f3.one()}, f3.one()) == 1);
  CHECK(count_linear_solutions({f3.one()}, f3.zero()) == 0);
  CHECK(count_linear_solutions({f3.one(), f3.one()}, f3.zero()) == 2);
  CHECK(count_linear_solutions({f3.one(), f3.one()}, f3.one()) == 1);
  CHECK(count_linear_solutions({}, f3.zero()) == 1);
  CHECK(count_linear_solutions({}, f3.one()) == 0);

  CHECK(kind_of([&] { count_linear_solutions({f3.zero()}, f3.one()); }) ==
        ErrorKind::ZeroCoefficient);
  Field f5(5);
  CHECK(kind_of([&] {
          count_linear_solutions({f5.one(), f5.one(), f5.one(), f5.one(), f5.one()},
                                 f5.zero(), 100);
        }) == ErrorKind::EnumerationBudgetExceeded);
}

TEST_CASE("linear solution counts depend only on whether b vanishes") {
  // Over any coefficient choice the count is ((q-1)^l + (q-1)(-1)^l)/q at b = 0
  // and ((q-1)^l - (-1)^l)/q otherwise, so count(0) - count(b) = (-1)^l.
  for (long q : {3L, 5L}) {
    Field f = Field::of_order(q);
    for (int ell = 1; ell <= 4; ++ell) {
      CAPTURE(q);
      CAPTURE(ell);
      // Exercise a few coefficient vectors, not just all-ones.
      for (long salt = 0; salt < 3; ++salt) {
        std::vector<FieldElement> c;
        for (int i = 0; i < ell; ++i) c.push_back(f.element_at(1 + (i + salt) % (q - 1)));
        Int at_zero = count_linear_solutions(c, f.zero());
        Int sign = (ell % 2 == 0) ? 1 : -1;
        CHECK(at_zero == (pow_int(Int(q - 1), ell) + sign * (q - 1)) / q);
        Int total = 0;
        for (long b = 1; b < q; ++b) {
          Int at_b = count_linear_solutions(c, f.element_at(b));
          CHECK(at_zero - at_b == sign);
          total += at_b;
        }
        CHECK(total + at_zero == pow_int(Int(q - 1), ell));
      }
    }
  }
}
