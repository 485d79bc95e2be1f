#include "typeb/limit_theorems.hpp"

#include "typeb/combinatorics.hpp"
#include "typeb/errors.hpp"
#include "typeb/nc_lattice.hpp"

namespace typeb {

namespace {

// N^(1 - n/2) when that is rational: integral exponent for even n, otherwise
// sqrt(N) must be an integer.
Rational clt_scale(long long n_summands, int n, bool* representable) {
  *representable = true;
  if (n % 2 == 0) return rational_pow(Rational(static_cast<long>(n_summands)), 1 - n / 2);
  Integer root;
  Integer big(static_cast<long>(n_summands));
  if (mpz_perfect_square_p(big.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
    return rational_pow(Rational(root), 2 - n);
  }
  *representable = false;
  return Rational(0);
}

}  // namespace

CSeries clt_limit_r_transform(const CltSpec& spec) {
  if (spec.order < 2) throw DomainError("clt order must be at least 2");
  CSeries out(spec.order);
  out.set_coeff(2, spec.variance);
  return out;
}

MomentSequence clt_limit_moments(const CltSpec& spec) {
  return cumulants_to_moments(cumulants_from_series(clt_limit_r_transform(spec)));
}

MomentSequence clt_finite_n_moments(const CltSpec& spec, const CumulantSequence& base,
                                    long long n_summands) {
  if (n_summands < 1) throw DomainError("need at least one summand");
  if (base.order() < spec.order)
    throw DimensionError("base cumulants stop at order " + std::to_string(base.order()) +
                         ", need " + std::to_string(spec.order));
  if (!base.value(1).is_zero())
    throw DomainError("summands must be centered: kappa_1 = " + to_string(base.value(1)));
  CumulantSequence scaled(spec.order);
  for (int n = 1; n <= spec.order; ++n) {
    // free cumulants are additive over the N free summands, then homogeneous
    // of degree n under the 1/sqrt(N) dilation
    bool representable = true;
    const Rational factor = clt_scale(n_summands, n, &representable);
    if (!representable) {
      if (base.value(n).is_zero()) continue;
      throw ExactnessError("kappa_" + std::to_string(n) + " scale N^(1-n/2) is irrational for N = " +
                           std::to_string(n_summands));
    }
    scaled.set_value(n, factor * base.value(n));
  }
  return cumulants_to_moments(scaled);
}

bool arcsine_check(int order) {
  if (order < 2) throw DomainError("arcsine check needs order >= 2");
  for (int k = 1; 2 * k <= order; ++k) {
    const Integer lhs = catalan(static_cast<unsigned long>(k)) * Integer(1 + k);
    if (lhs != binomial(static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k)))
      return false;
  }
  return true;
}

MomentSequence bernoulli_moments(const BernoulliSpec& spec, int order) {
  if (order < 1) throw DomainError("order must be at least 1");
  MomentSequence out(order);
  for (int n = 1; n <= order; ++n)
    out.set_value(n, spec.rate * dual_pow(spec.jump, static_cast<unsigned long>(n)));
  return out;
}

CumulantSequence poisson_sum_cumulants(const BernoulliSpec& spec, long long n_summands,
                                       int order) {
  if (n_summands < 1) throw DomainError("need at least one summand");
  BernoulliSpec shrunk = spec;
  shrunk.rate = Rational(1, static_cast<unsigned long>(n_summands)) * spec.rate;
  const CumulantSequence one = moments_to_cumulants(bernoulli_moments(shrunk, order));
  CumulantSequence out(order);
  for (int n = 1; n <= order; ++n)
    out.set_value(n, Rational(static_cast<long>(n_summands)) * one.value(n));
  return out;
}

CumulantSequence poisson_limit_cumulants(const BernoulliSpec& spec, int order) {
  if (order < 1) throw DomainError("order must be at least 1");
  CumulantSequence out(order);
  for (int n = 1; n <= order; ++n)
    out.set_value(n, spec.rate * dual_pow(spec.jump, static_cast<unsigned long>(n)));
  return out;
}

std::vector<LimitReportEntry> poisson_report(const BernoulliSpec& spec,
                                             const std::vector<long long>& ns, int order) {
  const CumulantSequence limit = poisson_limit_cumulants(spec, order);
  std::vector<LimitReportEntry> out;
  out.reserve(ns.size());
  for (long long n_summands : ns) {
    LimitReportEntry entry{n_summands, poisson_sum_cumulants(spec, n_summands, order), limit, {}};
    entry.deviation.reserve(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n)
      entry.deviation.push_back(entry.cumulants.value(n) - limit.value(n));
    out.push_back(std::move(entry));
  }
  return out;
}

CumulantSequence clt_square_cumulants(const DualScalar& sigma, int order) {
  if (order < 1) throw DomainError("order must be at least 1");
  if (2 * order > kNcCap)
    throw SizeLimitError("order " + std::to_string(order) + " needs moments past the cap");
  CltSpec doubled{2 * order, sigma};
  const MomentSequence limit = clt_limit_moments(doubled);
  MomentSequence square(order);
  for (int n = 1; n <= order; ++n) square.set_value(n, limit.value(2 * n));
  return moments_to_cumulants(square);
}

bool semicircle_square_check(const DualScalar& sigma, int order) {
  const CumulantSequence k = clt_square_cumulants(sigma, order);
  for (int n = 1; n <= order; ++n)
    if (k.value(n) != sigma * dual_pow(DualScalar::one(), static_cast<unsigned long>(n)))
      return false;
  return true;
}

bool hankel_necessary_check(const MomentSequence& moments) {
  if (moments.order() < 4)
    throw DimensionError("need moments through order 4, have " +
                         std::to_string(moments.order()));
  const Rational m2 = moments.value(2).t;
  const Rational m3 = moments.value(3).t;
  const Rational m4 = moments.value(4).t;
  return m2 * m4 >= m3 * m3;
}

}  // namespace typeb
