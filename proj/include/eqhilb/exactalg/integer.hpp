#ifndef EQHILB_EXACTALG_INTEGER_HPP
#define EQHILB_EXACTALG_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eqhilb {

using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n >= 0,
// and C(-1, 0) = 1.
inline Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n < 0) return k == 0 ? 1 : 0;
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace eqhilb

#endif  // EQHILB_EXACTALG_INTEGER_HPP
