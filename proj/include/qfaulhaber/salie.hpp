#pragma once

#include <map>
#include <vector>

#include "qfaulhaber/tpoly.hpp"
#include "qfaulhaber/verdict.hpp"

namespace qfaulhaber {

/// Alternating q-power sum
///   T_{m,n} = sum_{k=1..n} [2k]/[2] [k]^{m-1} (-q^{(m+1)/2})^{n-k},
/// in the t-representation ((-q^{(m+1)/2})^{n-k} contributes sign
/// (-1)^{n-k} and t-exponent (m+1)(n-k)). Genuine half powers of q occur
/// for even m. m = 0 with n >= 1 is rejected like power_sum.
TPoly t_sum(int m, int n);

/// Result of fitting the expansion coefficients g_{k,m} of T_{2m,n}.
struct SalieFit {
    int m = 0;
    std::map<int, TPoly> g;        // k -> g_{k,m}, 1 <= k <= m
    int degree_bound_used = 0;     // largest per-k t-degree bound actually used
    std::vector<int> probes_used;  // n values whose identities formed the system
    bool residual_ok = false;      // held-out probes reproduced exactly
};

/// Solves for the polynomials g_{k,m} in the denominator-cleared expansion
///   T_{2m,n} [2] prod_{j=1..m}(1+t^{2j+1}) =
///     sum_{k=1..m} (1+t^{2n+1}) (1+t)^{m-k} prod_{j=1..k-1}(1+t^{2j+1})
///                  (-1)^{m-k} t^{2n(m-k)} g_{k,m}(t) ([n][n+1])^k
/// by stacking the identity over probe values of n and eliminating exactly
/// over Q. The solution is accepted only after reproducing two held-out
/// probes.
///
/// n_probes < 0 selects the default m + 3; values below m + 2 throw
/// UnderDetermined. degree_bound < 0 selects the default 2(m-k)+2 per g_{k,m}
/// with doubling on inconsistency up to 8(m+1); an explicit bound is
/// authoritative and inconsistency at it throws NoConsistentFit.
SalieFit salie_fit(int m, int n_probes = -1, int degree_bound = -1);

/// The tabulated g_{k,m} values for columns m = 1..4, built from the
/// factored forms; index k-1 within the returned column.
std::vector<TPoly> table1_column(int m);

/// Fits m = 1..4 and compares every g_{k,m} against the tabulated values.
Verdict verify_table1();

struct SalieSignEntry {
    int m = 0;
    int k = 0;
    bool has_negative = false;
    TPoly g;
};

/// Sign report over the fitted g_{k,m} for m <= m_max; reporting only.
std::vector<SalieSignEntry> salie_sign_report(int m_max);

}  // namespace qfaulhaber
