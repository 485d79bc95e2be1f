#pragma once

#include <vector>

#include "typeb/dual_scalar.hpp"
#include "typeb/rational.hpp"

namespace typeb {

class RationalMatrix {
 public:
  explicit RationalMatrix(int dim);
  static RationalMatrix identity(int dim);

  int dim() const { return dim_; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i * dim_ + j)]; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i * dim_ + j)]; }
  Rational trace() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<Rational> a_;
};

// d-dimensional matrix realization: the state is the normalized trace, and a
// rational weight matrix defines the linear functional
//   f(xi) = sum_ij weights(i, j) * xi(i, j)
// on the matrix bimodule.
struct MatrixModel {
  explicit MatrixModel(RationalMatrix weights_);

  int dim() const { return weights.dim(); }
  Rational phi(const RationalMatrix& a) const;
  Rational f(const RationalMatrix& xi) const;

  RationalMatrix weights;
};

// (a, xi) in the square-zero extension A x X with product
// (a, xi)(b, eta) = (ab, a eta + xi b)
struct PairElement {
  RationalMatrix a;
  RationalMatrix xi;
  friend bool operator==(const PairElement& p, const PairElement& q) {
    return p.a == q.a && p.xi == q.xi;
  }
};

PairElement pair_mul(const PairElement& p, const PairElement& q);

// (phi(a), f(xi)) as an element of the two-dimensional coefficient algebra
DualScalar expectation(const MatrixModel& model, const PairElement& p);

// (a, xi + b) in A x (X + A)
struct BimoduleElement {
  RationalMatrix a;
  RationalMatrix xi;
  RationalMatrix b;
  friend bool operator==(const BimoduleElement& p, const BimoduleElement& q) {
    return p.a == q.a && p.xi == q.xi && p.b == q.b;
  }
};

// (phi(a), f(xi) + phi(b))
DualScalar conditional_expectation(const MatrixModel& model, const BimoduleElement& e);

// (x, t) . (a, xi + b) = (x a, x xi + (t a + x b))
BimoduleElement c_action(const DualScalar& c, const BimoduleElement& e);

// Multilinear free cumulant of (a_1, ..., a_n) with respect to phi.
Rational type_a_cumulant(const MatrixModel& model, const std::vector<RationalMatrix>& as);

// Cumulant with one bimodule slot: argument p (1-based) is xi, evaluated by f
// on the block through p and by phi elsewhere.  others lists the n-1
// remaining arguments in order.
Rational kprime(const MatrixModel& model, const std::vector<RationalMatrix>& others, int p,
                const RationalMatrix& xi);

// Cumulant of pair elements with respect to the expectation above.
DualScalar type_b_cumulant(const MatrixModel& model, const std::vector<PairElement>& word);

// Verifies componentwise: kappa_n((a_1,xi_1),...,(a_n,xi_n)) equals
// ( k_n(a_1,...,a_n), sum_p k'_n(a_1,...,xi_p,...,a_n) ).
bool component_identity_check(const MatrixModel& model, const std::vector<PairElement>& word);

}  // namespace typeb
