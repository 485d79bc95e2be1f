#include "typeb/rational.hpp"

#include <cctype>

#include "typeb/errors.hpp"

namespace typeb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  bool negative = false;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) {
    negative = num_digits[0] == '-';
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  Integer n(std::string(num_digits), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && r == 0) throw NotInvertibleError("0 has no negative power");
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), k);
  Rational out = invert ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace typeb
