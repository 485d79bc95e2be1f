#include "typeb/combinatorics.hpp"

namespace typeb {

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer catalan(unsigned long n) { return binomial(2 * n, n) / Integer(n + 1); }

}  // namespace typeb
