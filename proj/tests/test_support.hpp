#pragma once

#include <random>

#include "typeb/cumulants.hpp"
#include "typeb/dual_scalar.hpp"
#include "typeb/rational.hpp"
#include "typeb/series.hpp"

namespace typeb::testing {

inline Rational Q(const char* text) { return parse_rational(text); }

inline DualScalar D(const char* x, const char* t) { return {Q(x), Q(t)}; }

// deterministic generator for property-style checks
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : g_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }

  Rational rational(int max_num = 4, int max_den = 3) {
    Rational r(uniform(-max_num, max_num), static_cast<unsigned long>(uniform(1, max_den)));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  DualScalar dual() { return {rational(), rational()}; }

  DualScalar invertible_dual() { return {nonzero_rational(), rational()}; }

  CSeries series(int order, bool invertible_linear = false) {
    CSeries out(order);
    out.set_coeff(1, invertible_linear ? invertible_dual() : dual());
    for (int k = 2; k <= order; ++k) out.set_coeff(k, dual());
    return out;
  }

  CumulantSequence cumulant_sequence(int order) {
    CumulantSequence out(order);
    for (int k = 1; k <= order; ++k) out.set_value(k, dual());
    return out;
  }

  MomentSequence moment_sequence(int order) {
    MomentSequence out(order);
    for (int k = 1; k <= order; ++k) out.set_value(k, dual());
    return out;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace typeb::testing
