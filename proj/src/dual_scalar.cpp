#include "typeb/dual_scalar.hpp"

#include <ostream>

#include "typeb/errors.hpp"

namespace typeb {

DualScalar operator+(const DualScalar& a, const DualScalar& b) {
  return {a.x + b.x, a.t + b.t};
}

DualScalar operator-(const DualScalar& a, const DualScalar& b) {
  return {a.x - b.x, a.t - b.t};
}

DualScalar operator-(const DualScalar& a) { return {-a.x, -a.t}; }

DualScalar operator*(const DualScalar& a, const DualScalar& b) {
  return {a.x * b.x, a.x * b.t + a.t * b.x};
}

DualScalar operator*(const Rational& c, const DualScalar& a) { return {c * a.x, c * a.t}; }

DualScalar operator*(const DualScalar& a, const Rational& c) { return c * a; }

DualScalar& operator+=(DualScalar& a, const DualScalar& b) { return a = a + b; }
DualScalar& operator-=(DualScalar& a, const DualScalar& b) { return a = a - b; }
DualScalar& operator*=(DualScalar& a, const DualScalar& b) { return a = a * b; }

DualScalar dual_pow(const DualScalar& a, unsigned long n) {
  if (n == 0) return DualScalar::one();
  if (n == 1) return a;
  Rational xn1 = rational_pow(a.x, static_cast<long>(n - 1));
  return {xn1 * a.x, Rational(static_cast<long>(n)) * xn1 * a.t};
}

DualScalar dual_inverse(const DualScalar& a) {
  if (a.x == 0) throw NotInvertibleError("scalar part is zero: " + to_string(a));
  Rational inv = 1 / a.x;
  return {inv, -a.t * inv * inv};
}

DualScalar dual_div(const DualScalar& a, const DualScalar& b) { return a * dual_inverse(b); }

std::string to_string(const DualScalar& a) {
  return "(" + rational_to_string(a.x) + ", " + rational_to_string(a.t) + ")";
}

std::ostream& operator<<(std::ostream& os, const DualScalar& a) { return os << to_string(a); }

}  // namespace typeb
