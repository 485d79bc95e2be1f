#pragma once

#include "typeb/rational.hpp"

namespace typeb {

Integer binomial(unsigned long n, unsigned long k);

// catalan(n) = binom(2n, n) / (n + 1)
Integer catalan(unsigned long n);

}  // namespace typeb
