#pragma once

#include <iosfwd>
#include <string>

#include "typeb/rational.hpp"

namespace typeb {

// Element (x, t) of the commutative two-dimensional algebra with product
//   (x, t) * (y, s) = (x*y, x*s + t*y).
// Isomorphic to upper-triangular 2x2 matrices [[x, t], [0, x]]; the second
// component is nilpotent: (0, t)^2 = 0.
struct DualScalar {
  Rational x;  // scalar part
  Rational t;  // infinitesimal part

  DualScalar() : x(0), t(0) {}
  DualScalar(Rational x_, Rational t_) : x(std::move(x_)), t(std::move(t_)) {}

  static DualScalar zero() { return {}; }
  static DualScalar one() { return {1, 0}; }

  bool is_zero() const { return x == 0 && t == 0; }
  // invertible iff the scalar part is nonzero
  bool is_invertible() const { return x != 0; }

  friend bool operator==(const DualScalar& a, const DualScalar& b) {
    return a.x == b.x && a.t == b.t;
  }
  friend bool operator!=(const DualScalar& a, const DualScalar& b) { return !(a == b); }
};

DualScalar operator+(const DualScalar& a, const DualScalar& b);
DualScalar operator-(const DualScalar& a, const DualScalar& b);
DualScalar operator-(const DualScalar& a);
DualScalar operator*(const DualScalar& a, const DualScalar& b);
DualScalar operator*(const Rational& c, const DualScalar& a);
DualScalar operator*(const DualScalar& a, const Rational& c);
DualScalar& operator+=(DualScalar& a, const DualScalar& b);
DualScalar& operator-=(DualScalar& a, const DualScalar& b);
DualScalar& operator*=(DualScalar& a, const DualScalar& b);

// (x, t)^n = (x^n, n x^(n-1) t); n = 0 gives the unit.
DualScalar dual_pow(const DualScalar& a, unsigned long n);

// (x, t)^-1 = (1/x, -t/x^2); throws NotInvertibleError when x = 0.
DualScalar dual_inverse(const DualScalar& a);

DualScalar dual_div(const DualScalar& a, const DualScalar& b);

// "(x, t)" with canonical rational components
std::string to_string(const DualScalar& a);
std::ostream& operator<<(std::ostream& os, const DualScalar& a);

}  // namespace typeb
