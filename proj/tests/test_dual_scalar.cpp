#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "typeb/combinatorics.hpp"
#include "typeb/errors.hpp"
#include "typeb/matrix_model.hpp"

using namespace typeb;
using typeb::testing::D;
using typeb::testing::Gen;
using typeb::testing::Q;

TEST_CASE("rational parsing round trips and rejects junk") {
  CHECK(parse_rational("3/6") == Q("1/2"));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("+7") == 7);
  CHECK(rational_to_string(Q("-3/4")) == "-3/4");
  CHECK(rational_to_string(Q("8/4")) == "2");
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("2 /3"), ParseError);
}

TEST_CASE("rational_pow handles negative exponents") {
  CHECK(rational_pow(Q("2/3"), 3) == Q("8/27"));
  CHECK(rational_pow(Q("2/3"), -2) == Q("9/4"));
  CHECK(rational_pow(Q("5"), 0) == 1);
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), NotInvertibleError);
}

TEST_CASE("catalan and binomial values") {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900};
  for (unsigned long n = 0; n < 14; ++n) CHECK(catalan(n) == expected[n]);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("product rule (x,t)(y,s) = (xy, xs+ty)") {
  CHECK(D("2", "3") * D("4", "5") == D("8", "22"));
  CHECK(D("0", "3") * D("0", "5") == DualScalar::zero());
  CHECK(D("1", "0") * D("7", "-2") == D("7", "-2"));
  CHECK(Q("1/2") * D("4", "6") == D("2", "3"));
}

TEST_CASE("inverse and powers") {
  CHECK(dual_inverse(D("2", "3")) == D("1/2", "-3/4"));
  CHECK(dual_inverse(D("2", "3")) * D("2", "3") == DualScalar::one());
  CHECK_THROWS_AS(dual_inverse(D("0", "5")), NotInvertibleError);

  CHECK(dual_pow(D("2", "3"), 0) == DualScalar::one());
  CHECK(dual_pow(D("2", "3"), 3) == D("8", "36"));
  CHECK(dual_pow(D("0", "5"), 1) == D("0", "5"));
  CHECK(dual_pow(D("0", "5"), 2) == DualScalar::zero());

  Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const DualScalar a = gen.dual();
    DualScalar by_mul = DualScalar::one();
    for (unsigned long n = 0; n <= 6; ++n) {
      CHECK(dual_pow(a, n) == by_mul);
      by_mul *= a;
    }
  }
}

TEST_CASE("commutative ring axioms on random triples") {
  Gen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const DualScalar a = gen.dual(), b = gen.dual(), c = gen.dual();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + DualScalar::zero() == a);
    CHECK(a * DualScalar::one() == a);
    CHECK(a - a == DualScalar::zero());
  }
}

TEST_CASE("division by invertible elements") {
  Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    const DualScalar a = gen.dual();
    const DualScalar b = gen.invertible_dual();
    CHECK(dual_div(a, b) * b == a);
  }
}

TEST_CASE("embedding into upper-triangular 2x2 matrices is multiplicative") {
  const auto embed = [](const DualScalar& d) {
    RationalMatrix m(2);
    m.at(0, 0) = d.x;
    m.at(0, 1) = d.t;
    m.at(1, 1) = d.x;
    return m;
  };
  Gen gen(17);
  for (int i = 0; i < 300; ++i) {
    const DualScalar a = gen.dual(), b = gen.dual();
    CHECK(embed(a * b) == embed(a) * embed(b));
    CHECK(embed(a + b) == embed(a) + embed(b));
  }
}

TEST_CASE("printing") {
  CHECK(to_string(D("1/2", "-3/4")) == "(1/2, -3/4)");
  CHECK(to_string(DualScalar::zero()) == "(0, 0)");
}
