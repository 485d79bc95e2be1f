#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typeb/cumulants.hpp"
#include "typeb/errors.hpp"
#include "typeb/nc_lattice.hpp"
#include "test_support.hpp"

using namespace typeb;
using namespace typeb::testing;

namespace {

Word word_of(std::initializer_list<std::pair<int, int>> letters) {
  Word w;
  for (const auto& [family, element] : letters) w.push_back(Letter{family, element});
  return w;
}

CumulantSequence seq(std::vector<DualScalar> values) {
  const int order = static_cast<int>(values.size());
  return CumulantSequence(order, std::move(values));
}

MomentSequence mseq(std::vector<DualScalar> values) {
  const int order = static_cast<int>(values.size());
  return MomentSequence(order, std::move(values));
}

}  // namespace

TEST_CASE("sequence containers") {
  MomentSequence m(3);
  CHECK(m.order() == 3);
  CHECK(m.value(2) == DualScalar::zero());
  m.set_value(2, D("1", "1"));
  CHECK(m.value(2) == D("1", "1"));
  CHECK_THROWS_AS(m.value(0), TruncationError);
  CHECK_THROWS_AS(m.value(4), TruncationError);
  CHECK_THROWS_AS(MomentSequence(0), DomainError);
  CHECK_THROWS_AS(MomentSequence(2, {D("1", "0")}), DimensionError);
  CHECK_THROWS_AS(CumulantSequence(0), DomainError);
}

TEST_CASE("series round trips") {
  Gen gen(21);
  const MomentSequence m = gen.moment_sequence(6);
  CHECK(moments_from_series(to_series(m)) == m);
  const CumulantSequence k = gen.cumulant_sequence(6);
  CHECK(cumulants_from_series(to_series(k)) == k);
}

TEST_CASE("moment-cumulant transform: frozen values") {
  // centered limit with second cumulant (1,1): moments at orders 2,4,6,8
  // reinterpreted as a moment sequence in their own right
  const MomentSequence m = mseq({D("1", "1"), D("2", "4"), D("5", "15"), D("14", "56")});
  const CumulantSequence k = moments_to_cumulants(m);
  CHECK(k.value(1) == D("1", "1"));
  CHECK(k.value(2) == D("1", "2"));
  CHECK(k.value(3) == D("1", "3"));
  CHECK(k.value(4) == D("1", "4"));

  const CumulantSequence k2 = seq({D("1", "2"), D("0", "1"), D("3", "-1")});
  const MomentSequence m2 = cumulants_to_moments(k2);
  CHECK(m2.value(1) == D("1", "2"));
  CHECK(m2.value(2) == D("1", "5"));
  CHECK(m2.value(3) == D("4", "8"));

  const CumulantSequence k3 = moments_to_cumulants(mseq({D("1", "2"), D("0", "1"), D("3", "-1")}));
  CHECK(k3.value(1) == D("1", "2"));
  CHECK(k3.value(2) == D("-1", "-3"));
  CHECK(k3.value(3) == D("5", "8"));
}

TEST_CASE("semicircle cumulants produce Catalan moments") {
  CumulantSequence k(8);
  k.set_value(2, D("1", "0"));
  const MomentSequence m = cumulants_to_moments(k);
  const long catalans[] = {1, 2, 5, 14};
  for (int j = 1; j <= 4; ++j) {
    CHECK(m.value(2 * j) == DualScalar(Rational(catalans[j - 1]), Rational(0)));
    CHECK(m.value(2 * j - 1) == DualScalar::zero());
  }
}

TEST_CASE("transforms invert each other") {
  Gen gen(22);
  for (int trial = 0; trial < 40; ++trial) {
    const CumulantSequence k = gen.cumulant_sequence(7);
    CHECK(moments_to_cumulants(cumulants_to_moments(k)) == k);
    const MomentSequence m = gen.moment_sequence(7);
    CHECK(cumulants_to_moments(moments_to_cumulants(m)) == m);
  }
}

TEST_CASE("transform matches the direct lattice sums") {
  Gen gen(23);
  const CumulantSequence k = gen.cumulant_sequence(5);
  const MomentSequence m = cumulants_to_moments(k);
  const CSeries kf = to_series(k);
  for (int n = 1; n <= 5; ++n) {
    DualScalar total = DualScalar::zero();
    for (const auto& p : enumerate_nc(n)) total += cf_product(kf, p);
    CHECK(m.value(n) == total);
  }

  const MomentSequence m2 = gen.moment_sequence(5);
  const CumulantSequence k2 = moments_to_cumulants(m2);
  const CSeries mf = to_series(m2);
  for (int n = 1; n <= 5; ++n) {
    DualScalar total = DualScalar::zero();
    for (const auto& p : enumerate_nc(n))
      total += Rational(static_cast<long>(moebius_to_top(p))) * cf_product(mf, p);
    CHECK(k2.value(n) == total);
  }
}

TEST_CASE("transform size guards") {
  CHECK_THROWS_AS(cumulants_to_moments(CumulantSequence(kNcCap + 1)), SizeLimitError);
  CHECK_THROWS_AS(moments_to_cumulants(MomentSequence(kNcCap + 1)), SizeLimitError);
}

TEST_CASE("single-family oracle agrees with the sequence transform") {
  Gen gen(24);
  const MomentSequence m = gen.moment_sequence(6);
  const MixedMomentOracle oracle = moment_oracle(m);
  CHECK(oracle({}) == DualScalar::one());
  Word w;
  for (int n = 1; n <= 6; ++n) {
    w.push_back(Letter{0, 0});
    CHECK(oracle(w) == m.value(n));
  }
  const CumulantSequence k = moments_to_cumulants(m);
  for (int n = 1; n <= 6; ++n)
    CHECK(multilinear_cumulant(oracle, Word(static_cast<size_t>(n), Letter{0, 0})) == k.value(n));
}

TEST_CASE("free product oracle: single-family words reproduce each factor") {
  Gen gen(25);
  const CumulantSequence ka = gen.cumulant_sequence(5);
  const CumulantSequence kb = gen.cumulant_sequence(5);
  const MixedMomentOracle oracle = free_product_oracle({ka, kb});
  const MomentSequence ma = cumulants_to_moments(ka);
  const MomentSequence mb = cumulants_to_moments(kb);
  for (int n = 1; n <= 5; ++n) {
    CHECK(oracle(Word(static_cast<size_t>(n), Letter{0, 0})) == ma.value(n));
    CHECK(oracle(Word(static_cast<size_t>(n), Letter{1, 0})) == mb.value(n));
  }
  CHECK(oracle({}) == DualScalar::one());
  CHECK_THROWS_AS(oracle(word_of({{2, 0}})), DomainError);
  CHECK_THROWS_AS(free_product_oracle({}), DomainError);
}

TEST_CASE("free product oracle: mixed cumulants vanish") {
  Gen gen(26);
  const CumulantSequence ka = gen.cumulant_sequence(6);
  const CumulantSequence kb = gen.cumulant_sequence(6);
  const MixedMomentOracle oracle = free_product_oracle({ka, kb});
  const Word words[] = {
      word_of({{0, 0}, {1, 0}}),
      word_of({{0, 0}, {1, 0}, {0, 0}}),
      word_of({{0, 0}, {0, 0}, {1, 0}}),
      word_of({{1, 0}, {0, 0}, {1, 0}, {0, 0}}),
      word_of({{0, 0}, {1, 0}, {1, 0}, {0, 0}, {1, 0}}),
  };
  for (const auto& w : words) {
    CHECK(multilinear_cumulant(oracle, w) == DualScalar::zero());
    CHECK(freeness_test(oracle, w));
  }
}

TEST_CASE("free product oracle: a known mixed moment") {
  // phi(abab) = phi(a^2) phi(b)^2 + phi(a)^2 phi(b^2) - phi(a)^2 phi(b)^2
  // for free a, b
  Gen gen(27);
  const CumulantSequence ka = gen.cumulant_sequence(4);
  const CumulantSequence kb = gen.cumulant_sequence(4);
  const MixedMomentOracle oracle = free_product_oracle({ka, kb});
  const MomentSequence ma = cumulants_to_moments(ka);
  const MomentSequence mb = cumulants_to_moments(kb);
  const DualScalar lhs = oracle(word_of({{0, 0}, {1, 0}, {0, 0}, {1, 0}}));
  const DualScalar rhs = ma.value(2) * mb.value(1) * mb.value(1) +
                         ma.value(1) * ma.value(1) * mb.value(2) -
                         ma.value(1) * ma.value(1) * mb.value(1) * mb.value(1);
  CHECK(lhs == rhs);
}

TEST_CASE("cumulants of a sum of free variables are additive") {
  Gen gen(28);
  const CumulantSequence ka = gen.cumulant_sequence(5);
  const CumulantSequence kb = gen.cumulant_sequence(5);
  const MixedMomentOracle oracle = free_product_oracle({ka, kb});
  // moments of a + b from the oracle by expanding the words
  for (int n = 1; n <= 5; ++n) {
    MixedMomentOracle sum_oracle = [&oracle](const Word& w) {
      // w uses family 0 only; expand each letter over the two families
      DualScalar total = DualScalar::zero();
      const size_t len = w.size();
      for (size_t mask = 0; mask < (size_t{1} << len); ++mask) {
        Word expanded;
        for (size_t i = 0; i < len; ++i)
          expanded.push_back(Letter{(mask >> i) & 1 ? 1 : 0, 0});
        total += oracle(expanded);
      }
      return w.empty() ? DualScalar::one() : total;
    };
    const DualScalar kappa_sum =
        multilinear_cumulant(sum_oracle, Word(static_cast<size_t>(n), Letter{0, 0}));
    CHECK(kappa_sum == ka.value(n) + kb.value(n));
  }
}

TEST_CASE("multilinear cumulant error paths") {
  const MixedMomentOracle oracle = moment_oracle(MomentSequence(3));
  CHECK_THROWS_AS(multilinear_cumulant(oracle, {}), DomainError);
  CHECK_THROWS_AS(
      multilinear_cumulant(oracle, Word(static_cast<size_t>(kNcCap + 1), Letter{0, 0})),
      SizeLimitError);
  CHECK_THROWS_AS(freeness_test(oracle, Word(2, Letter{0, 0})), DomainError);
}
