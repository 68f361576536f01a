#pragma once

#include "tutte/bipoly.hpp"

namespace tutte::detail {

/// C(a, b), zero outside 0 <= b <= a.
inline Integer binom(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

inline Integer ipow(const Integer& base, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace tutte::detail
