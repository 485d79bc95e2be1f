#include "typeb/series.hpp"

#include "typeb/errors.hpp"
#include "typeb/nc_lattice.hpp"

namespace typeb {

namespace {

void check_orders(int a, int b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": orders " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

void check_cap(int order, int cap, const char* what) {
  if (order > cap)
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(order) +
                         " exceeds cap " + std::to_string(cap));
}

CSeries convolve(const CSeries& f, const CSeries& g, int cap, bool restricted,
                 const char* what) {
  check_orders(f.order(), g.order(), what);
  check_cap(f.order(), cap, what);
  CSeries out(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    const NcTable& tab = nc_table(n);
    const auto& kr = tab.kreweras_index();
    DualScalar acc;
    for (size_t i = 0; i < tab.partitions().size(); ++i) {
      const SetPartition& p = tab.partitions()[i];
      if (restricted) {
        // {1} must be a singleton block
        if (p.blocks().front().size() != 1) continue;
      }
      acc += cf_product(f, p) * cf_product(g, tab.partitions()[static_cast<size_t>(kr[i])]);
    }
    out.set_coeff(n, acc);
  }
  return out;
}

}  // namespace

CSeries::CSeries(int order) : order_(order) {
  if (order < 1) throw DomainError("series order must be at least 1");
  c_.assign(static_cast<size_t>(order), DualScalar());
}

CSeries::CSeries(int order, std::vector<DualScalar> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw DomainError("series order must be at least 1");
  if (c_.size() != static_cast<size_t>(order))
    throw DimensionError("expected " + std::to_string(order) + " coefficients, got " +
                         std::to_string(c_.size()));
}

const DualScalar& CSeries::coeff(int k) const {
  if (k < 1 || k > order_) throw TruncationError("coefficient " + std::to_string(k) + " of order-" + std::to_string(order_) + " series");
  return c_[static_cast<size_t>(k - 1)];
}

void CSeries::set_coeff(int k, DualScalar v) {
  if (k < 1 || k > order_) throw TruncationError("coefficient " + std::to_string(k) + " of order-" + std::to_string(order_) + " series");
  c_[static_cast<size_t>(k - 1)] = std::move(v);
}

UnitSeries::UnitSeries(int order) : order_(order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  c_.assign(static_cast<size_t>(order) + 1, DualScalar());
}

UnitSeries::UnitSeries(int order, std::vector<DualScalar> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  if (c_.size() != static_cast<size_t>(order) + 1)
    throw DimensionError("expected " + std::to_string(order + 1) + " coefficients, got " +
                         std::to_string(c_.size()));
}

const DualScalar& UnitSeries::coeff(int k) const {
  if (k < 0 || k > order_) throw TruncationError("coefficient " + std::to_string(k) + " of order-" + std::to_string(order_) + " series");
  return c_[static_cast<size_t>(k)];
}

void UnitSeries::set_coeff(int k, DualScalar v) {
  if (k < 0 || k > order_) throw TruncationError("coefficient " + std::to_string(k) + " of order-" + std::to_string(order_) + " series");
  c_[static_cast<size_t>(k)] = std::move(v);
}

CSeries identity_series(int order) {
  CSeries out(order);
  out.set_coeff(1, DualScalar::one());
  return out;
}

CSeries zeta_prime(int order) {
  CSeries out(order);
  for (int k = 1; k <= order; ++k) out.set_coeff(k, DualScalar::one());
  return out;
}

CSeries series_add(const CSeries& a, const CSeries& b) {
  check_orders(a.order(), b.order(), "series_add");
  CSeries out(a.order());
  for (int k = 1; k <= a.order(); ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
  return out;
}

CSeries series_scale(const DualScalar& c, const CSeries& a) {
  CSeries out(a.order());
  for (int k = 1; k <= a.order(); ++k) out.set_coeff(k, c * a.coeff(k));
  return out;
}

CSeries series_mul(const CSeries& a, const CSeries& b) {
  check_orders(a.order(), b.order(), "series_mul");
  CSeries out(a.order());
  for (int i = 1; i < a.order(); ++i)
    for (int j = 1; i + j <= a.order(); ++j)
      out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
  return out;
}

UnitSeries series_pointwise_mul(const UnitSeries& a, const UnitSeries& b) {
  check_orders(a.order(), b.order(), "series_pointwise_mul");
  UnitSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i)
    for (int j = 0; i + j <= a.order(); ++j)
      out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
  return out;
}

DualScalar cf_product(const CSeries& f, const SetPartition& p) {
  DualScalar out = DualScalar::one();
  for (const auto& block : p.blocks()) {
    if (static_cast<int>(block.size()) > f.order())
      throw TruncationError("block of size " + std::to_string(block.size()) +
                            " exceeds series order " + std::to_string(f.order()));
    out *= f.coeff(static_cast<int>(block.size()));
  }
  return out;
}

CSeries box_conv(const CSeries& f, const CSeries& g, int cap) {
  return convolve(f, g, cap, false, "box_conv");
}

CSeries check_box_conv(const CSeries& f, const CSeries& g, int cap) {
  return convolve(f, g, cap, true, "check_box_conv");
}

CSeries compose(const CSeries& f, const CSeries& g) {
  check_orders(f.order(), g.order(), "compose");
  const int n = f.order();
  CSeries acc(n);
  CSeries power = g;
  for (int k = 1; k <= n; ++k) {
    acc = series_add(acc, series_scale(f.coeff(k), power));
    if (k < n) power = series_mul(power, g);
  }
  return acc;
}

UnitSeries compose(const UnitSeries& f, const CSeries& g) {
  check_orders(f.order(), g.order(), "compose");
  const int n = f.order();
  UnitSeries acc(n);
  acc.set_coeff(0, f.coeff(0));
  CSeries power = g;
  for (int k = 1; k <= n; ++k) {
    for (int j = k; j <= n; ++j) acc.set_coeff(j, acc.coeff(j) + f.coeff(k) * power.coeff(j));
    if (k < n) power = series_mul(power, g);
  }
  return acc;
}

CSeries invert_compositional(const CSeries& f) {
  if (!f.coeff(1).is_invertible())
    throw NotInvertibleError("linear coefficient " + to_string(f.coeff(1)) +
                             " has zero scalar part");
  const int n = f.order();
  const DualScalar lin_inv = dual_inverse(f.coeff(1));
  CSeries g(n);
  g.set_coeff(1, lin_inv);
  for (int m = 2; m <= n; ++m) {
    // with g_m still zero, [z^m] f(g(z)) misses exactly f_1 * g_m
    const CSeries h = compose(f, g);
    g.set_coeff(m, -(lin_inv * h.coeff(m)));
  }
  return g;
}

UnitSeries s_transform(const CSeries& r) {
  const CSeries inv = invert_compositional(r);
  UnitSeries out(r.order() - 1);
  for (int k = 0; k < r.order(); ++k) out.set_coeff(k, inv.coeff(k + 1));
  return out;
}

}  // namespace typeb
