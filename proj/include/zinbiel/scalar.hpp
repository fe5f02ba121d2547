#pragma once

#include <gmpxx.h>

#include <string>

namespace zinbiel {

// Exact rationals; gmp keeps results of arithmetic in lowest terms.
using Scalar = mpq_class;
using Integer = mpz_class;

// Construction from a raw pair needs an explicit canonicalize.
inline Scalar make_scalar(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// k!! for odd k >= -1; double_factorial_odd(2n-3) counts binary bracketings.
inline Integer double_factorial_odd(long k) {
    Integer r = 1;
    for (long i = k; i >= 3; i -= 2) r *= i;
    return r;
}

}  // namespace zinbiel
