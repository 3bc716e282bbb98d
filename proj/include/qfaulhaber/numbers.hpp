#pragma once

#include <gmpxx.h>

namespace qfaulhaber {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept canonical (positive denominator,
/// reduced, zero is 0/1) by construction.
using Rational = mpq_class;

inline Integer integer_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer integer_factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace qfaulhaber
