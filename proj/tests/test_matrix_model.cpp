#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typeb/errors.hpp"
#include "typeb/matrix_model.hpp"
#include "test_support.hpp"

using namespace typeb;
using namespace typeb::testing;

namespace {

RationalMatrix from_rows(int dim, std::vector<std::vector<const char*>> rows) {
  RationalMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = Q(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

RationalMatrix random_matrix(Gen& gen, int dim) {
  RationalMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = gen.rational();
  return m;
}

PairElement random_pair(Gen& gen, int dim) {
  return {random_matrix(gen, dim), random_matrix(gen, dim)};
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  const RationalMatrix a = from_rows(2, {{"1", "2"}, {"3", "4"}});
  const RationalMatrix b = from_rows(2, {{"0", "1"}, {"1", "0"}});
  CHECK(a.trace() == Q("5"));
  CHECK((a + b).at(0, 1) == Q("3"));
  const RationalMatrix ab = a * b;
  CHECK(ab.at(0, 0) == Q("2"));
  CHECK(ab.at(0, 1) == Q("1"));
  CHECK(ab.at(1, 0) == Q("4"));
  CHECK(ab.at(1, 1) == Q("3"));
  CHECK(RationalMatrix::identity(2) * a == a);
  CHECK(Q("1/2") * a == from_rows(2, {{"1/2", "1"}, {"3/2", "2"}}));
  CHECK_THROWS_AS(a * RationalMatrix(3), DimensionError);
  CHECK_THROWS_AS(a + RationalMatrix(3), DimensionError);
  CHECK_THROWS_AS(RationalMatrix(0), DomainError);
}

TEST_CASE("state and weight functional") {
  const MatrixModel model(from_rows(2, {{"1", "1/2"}, {"0", "1/3"}}));
  CHECK(model.dim() == 2);
  const RationalMatrix a = from_rows(2, {{"1", "2"}, {"3", "4"}});
  CHECK(model.phi(a) == Q("5/2"));                          // trace / 2
  CHECK(model.phi(RationalMatrix::identity(2)) == Q("1"));  // normalized
  // f = 1*a00 + 1/2*a01 + 0*a10 + 1/3*a11
  CHECK(model.f(a) == Q("1") + Q("1") + Q("4/3"));
  CHECK_THROWS_AS(model.phi(RationalMatrix(3)), DimensionError);
}

TEST_CASE("square-zero pair multiplication") {
  Gen gen(31);
  for (int trial = 0; trial < 25; ++trial) {
    const PairElement p = random_pair(gen, 2);
    const PairElement q = random_pair(gen, 2);
    const PairElement r = random_pair(gen, 2);
    CHECK(pair_mul(pair_mul(p, q), r) == pair_mul(p, pair_mul(q, r)));
  }
  // the bimodule part squares to zero
  const RationalMatrix zero(2);
  const PairElement xi_only{zero, from_rows(2, {{"1", "2"}, {"3", "4"}})};
  const PairElement eta_only{zero, from_rows(2, {{"5", "6"}, {"7", "8"}})};
  CHECK((pair_mul(xi_only, eta_only) == PairElement{zero, zero}));
}

TEST_CASE("expectation and conditional expectation") {
  const MatrixModel model(from_rows(2, {{"1", "0"}, {"0", "1"}}));
  const RationalMatrix a = from_rows(2, {{"2", "0"}, {"0", "4"}});
  const RationalMatrix xi = from_rows(2, {{"1", "1"}, {"1", "1"}});
  CHECK(expectation(model, {a, xi}) == D("3", "2"));
  const RationalMatrix b = from_rows(2, {{"1", "0"}, {"0", "3"}});
  CHECK(conditional_expectation(model, {a, xi, b}) == D("3", "4"));
}

TEST_CASE("coefficient action is a module structure") {
  Gen gen(32);
  for (int trial = 0; trial < 25; ++trial) {
    const DualScalar c = gen.dual();
    const DualScalar d = gen.dual();
    const BimoduleElement e{random_matrix(gen, 2), random_matrix(gen, 2), random_matrix(gen, 2)};
    CHECK(c_action(c, c_action(d, e)) == c_action(c * d, e));
    CHECK(c_action(DualScalar::one(), e) == e);
  }
}

TEST_CASE("conditional expectation is linear over the coefficient algebra") {
  Gen gen(33);
  const MatrixModel model(random_matrix(gen, 3));
  for (int trial = 0; trial < 25; ++trial) {
    const DualScalar c = gen.dual();
    const BimoduleElement e{random_matrix(gen, 3), random_matrix(gen, 3), random_matrix(gen, 3)};
    CHECK(conditional_expectation(model, c_action(c, e)) ==
          c * conditional_expectation(model, e));
  }
}

TEST_CASE("scalar cumulants at low order") {
  Gen gen(34);
  const MatrixModel model(random_matrix(gen, 3));
  const RationalMatrix a = random_matrix(gen, 3);
  const RationalMatrix b = random_matrix(gen, 3);
  const RationalMatrix c = random_matrix(gen, 3);
  CHECK(type_a_cumulant(model, {a}) == model.phi(a));
  CHECK(type_a_cumulant(model, {a, b}) == model.phi(a * b) - model.phi(a) * model.phi(b));
  // third cumulant: phi(abc) - phi(ab)phi(c) - phi(a)phi(bc) - phi(ac... )
  const Rational k3 = model.phi(a * b * c) - model.phi(a * b) * model.phi(c) -
                      model.phi(b * c) * model.phi(a) - model.phi(a * c) * model.phi(b) +
                      Q("2") * model.phi(a) * model.phi(b) * model.phi(c);
  CHECK(type_a_cumulant(model, {a, b, c}) == k3);
  CHECK_THROWS_AS(type_a_cumulant(model, {}), DomainError);
  CHECK_THROWS_AS(type_a_cumulant(model, {RationalMatrix(2)}), DimensionError);
}

TEST_CASE("one-slot cumulants at low order") {
  Gen gen(35);
  const MatrixModel model(random_matrix(gen, 2));
  const RationalMatrix xi = random_matrix(gen, 2);
  const RationalMatrix b = random_matrix(gen, 2);
  CHECK(kprime(model, {}, 1, xi) == model.f(xi));
  CHECK(kprime(model, {b}, 1, xi) == model.f(xi * b) - model.f(xi) * model.phi(b));
  CHECK(kprime(model, {b}, 2, xi) == model.f(b * xi) - model.phi(b) * model.f(xi));
  CHECK_THROWS_AS(kprime(model, {b}, 3, xi), DomainError);
  CHECK_THROWS_AS(kprime(model, {b}, 0, xi), DomainError);
}

TEST_CASE("pair cumulants split into their two components") {
  Gen gen(36);
  for (int dim = 2; dim <= 3; ++dim) {
    const MatrixModel model(random_matrix(gen, dim));
    for (int n = 1; n <= 4; ++n) {
      std::vector<PairElement> word;
      for (int i = 0; i < n; ++i) word.push_back(random_pair(gen, dim));
      CHECK(component_identity_check(model, word));
    }
  }
}

TEST_CASE("pair cumulant values at low order") {
  Gen gen(37);
  const MatrixModel model(random_matrix(gen, 2));
  const PairElement p = random_pair(gen, 2);
  const PairElement q = random_pair(gen, 2);
  CHECK(type_b_cumulant(model, {p}) == expectation(model, p));
  CHECK(type_b_cumulant(model, {p, q}) ==
        expectation(model, pair_mul(p, q)) - expectation(model, p) * expectation(model, q));
  CHECK_THROWS_AS(type_b_cumulant(model, {}), DomainError);
}
