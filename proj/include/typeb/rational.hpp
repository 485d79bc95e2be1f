#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace typeb {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" (q > 0 after canonicalization).  Rejects anything
// else -- floats, whitespace, zero denominators -- with ParseError.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// r^e for integer e (negative e inverts; throws NotInvertibleError on 0).
Rational rational_pow(const Rational& r, long e);

bool is_integer(const Rational& r);

}  // namespace typeb
