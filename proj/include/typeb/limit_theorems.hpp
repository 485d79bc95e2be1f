#pragma once

#include <vector>

#include "typeb/cumulants.hpp"
#include "typeb/dual_scalar.hpp"
#include "typeb/series.hpp"

namespace typeb {

// Central limit: normalized sums of centered, identically distributed free
// summands with second cumulant `variance`.
struct CltSpec {
  int order = 6;
  DualScalar variance = DualScalar(1, 1);
};

// Summand for the compound Poisson limit: cumulants of the base variable are
// rate * jump^n.
struct BernoulliSpec {
  DualScalar rate = DualScalar(1, 0);
  DualScalar jump = DualScalar(1, 1);
};

// R-transform of the central limit: variance * z^2, nothing else.
CSeries clt_limit_r_transform(const CltSpec& spec);

// Moments of the central limit, computed as cumulants_to_moments of the
// limit R-transform: zero at odd orders, variance^k * catalan(k) at 2k.
MomentSequence clt_limit_moments(const CltSpec& spec);

// Exact moments of (x_1 + ... + x_N) / sqrt(N) where each x_i has the given
// cumulant sequence (kappa_1 must vanish).  Odd orders need an exactly
// representable scale: N a perfect square or the cumulant zero; otherwise
// ExactnessError.
MomentSequence clt_finite_n_moments(const CltSpec& spec, const CumulantSequence& base,
                                    long long n_summands);

// Both limit moment components at order 2k sum to the even binomial:
// catalan(k) + k * catalan(k) = binom(2k, k), exactly, for all 2k <= order.
bool arcsine_check(int order);

// Moments of a single Bernoulli-type summand: M_n = rate * jump^n.
MomentSequence bernoulli_moments(const BernoulliSpec& spec, int order);

// Cumulants of s_N = b_1 + ... + b_N where each b_i has moments
// (rate / N) * jump^n:  N * m2c(moments of one summand).
CumulantSequence poisson_sum_cumulants(const BernoulliSpec& spec, long long n_summands,
                                       int order);

// Limit cumulants: kappa_n = rate * jump^n.
CumulantSequence poisson_limit_cumulants(const BernoulliSpec& spec, int order);

// One row of the compound-Poisson convergence report.
struct LimitReportEntry {
  long long n_summands = 0;
  CumulantSequence cumulants;   // of the sum s_N
  CumulantSequence limit;       // rate * jump^n
  std::vector<DualScalar> deviation;  // cumulants - limit, per order
};

std::vector<LimitReportEntry> poisson_report(const BernoulliSpec& spec,
                                             const std::vector<long long>& ns, int order);

// Cumulants of the square of the centered limit variable with second cumulant
// sigma, derived by moment transfer: even moments of the variable become all
// moments of the square.
CumulantSequence clt_square_cumulants(const DualScalar& sigma, int order);

// Checks kappa_n(square) == sigma for every n <= order (the stated
// compound-Poisson identification of the squared limit).
bool semicircle_square_check(const DualScalar& sigma, int order);

// Second components m_n of the first four moments must satisfy the Hankel
// condition m_2 * m_4 >= m_3^2 to come from a positive measure; returns
// whether it holds.  Needs order >= 4.
bool hankel_necessary_check(const MomentSequence& moments);

}  // namespace typeb
