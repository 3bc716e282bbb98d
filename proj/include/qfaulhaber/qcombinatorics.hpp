#pragma once

#include "qfaulhaber/tpoly.hpp"

namespace qfaulhaber {

/// q-integer [k] = 1 + q + ... + q^{k-1}; [0] = 0. Throws NegativeArgument.
QPoly q_int(int k);

/// q-factorial [k]! = [1][2]...[k]; [0]! = 1. Throws NegativeArgument.
QPoly q_factorial(int k);

/// Binomial coefficient with the lattice convention: 0 whenever k < 0,
/// n < 0, or k > n.
Integer binomial(long n, long k);

/// Complete homogeneous symmetric function of degree j in 2r variables, r of
/// them specialized to 1 and r to q, via the closed form
/// h_j({1,q}^r) = sum_i C(r-1+i, r-1) C(r-1+j-i, r-1) q^i.
///
/// Edge cases: j < 0 gives 0; j = 0 gives 1 for any r (empty-product
/// convention at r <= 0); j > 0 with r <= 0 gives 0.
QPoly h_spec(int degree, int pairs);

/// Same value computed from the definition of h as the sum of all degree-j
/// monomials, by the generating-function recurrence of adding one variable
/// at a time. Independent of the binomial closed form. Throws
/// NegativePairCount for pairs < 0.
QPoly h_spec_oracle(int degree, int pairs);

}  // namespace qfaulhaber
