#pragma once

#include <vector>

#include "typeb/dual_scalar.hpp"
#include "typeb/partition.hpp"

namespace typeb {

inline constexpr int kBoxCap = 10;  // order cap for the convolutions

// Truncated power series without constant term: sum_{k=1}^{order} c_k z^k.
class CSeries {
 public:
  explicit CSeries(int order);
  CSeries(int order, std::vector<DualScalar> coeffs);

  int order() const { return order_; }
  const DualScalar& coeff(int k) const;  // 1 <= k <= order
  void set_coeff(int k, DualScalar v);

  friend bool operator==(const CSeries& a, const CSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CSeries& a, const CSeries& b) { return !(a == b); }

 private:
  int order_;
  std::vector<DualScalar> c_;  // c_[k-1] is the z^k coefficient
};

// Truncated power series with constant term: sum_{k=0}^{order} c_k z^k.
class UnitSeries {
 public:
  explicit UnitSeries(int order);
  UnitSeries(int order, std::vector<DualScalar> coeffs);

  int order() const { return order_; }
  const DualScalar& coeff(int k) const;  // 0 <= k <= order
  void set_coeff(int k, DualScalar v);

  friend bool operator==(const UnitSeries& a, const UnitSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const UnitSeries& a, const UnitSeries& b) { return !(a == b); }

 private:
  int order_;
  std::vector<DualScalar> c_;
};

// z + 0 z^2 + ... : the compositional unit
CSeries identity_series(int order);

// Every coefficient is the algebra unit (1, 0); convolving against it turns
// cumulant series into moment series.
CSeries zeta_prime(int order);

CSeries series_add(const CSeries& a, const CSeries& b);
CSeries series_scale(const DualScalar& c, const CSeries& a);
// Cauchy product truncated at the common order
CSeries series_mul(const CSeries& a, const CSeries& b);
// product of the series as functions (Cauchy product with constant terms)
UnitSeries series_pointwise_mul(const UnitSeries& a, const UnitSeries& b);

// prod over blocks V of p of f_{|V|}; TruncationError when a block is larger
// than the order of f.
DualScalar cf_product(const CSeries& f, const SetPartition& p);

// (f box g)_n = sum over p in NC(n) of cf_p(f) * cf_{Kr(p)}(g)
CSeries box_conv(const CSeries& f, const CSeries& g, int cap = kBoxCap);

// Same sum restricted to partitions in which {1} is a singleton block.
CSeries check_box_conv(const CSeries& f, const CSeries& g, int cap = kBoxCap);

// Truncated substitution f(g(z)); g must lack a constant term (by type).
CSeries compose(const CSeries& f, const CSeries& g);
UnitSeries compose(const UnitSeries& f, const CSeries& g);

// Compositional inverse: compose(f, result) = z up to the truncation order.
// Requires invertible linear coefficient.
CSeries invert_compositional(const CSeries& f);

// S(z) = R^{<-1>}(z) / z as a UnitSeries of order N-1.
UnitSeries s_transform(const CSeries& r);

}  // namespace typeb
