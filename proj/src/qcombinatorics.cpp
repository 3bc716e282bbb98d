#include "qfaulhaber/qcombinatorics.hpp"

namespace qfaulhaber {

QPoly q_int(int k) {
    if (k < 0) throw NegativeArgument("q_int: negative argument");
    std::vector<Integer> qc(static_cast<std::size_t>(k), Integer(1));
    return QPoly::from_q_coeffs(qc);
}

QPoly q_factorial(int k) {
    if (k < 0) throw NegativeArgument("q_factorial: negative argument");
    QPoly acc(1);
    for (int i = 2; i <= k; ++i) acc *= q_int(i);
    return acc;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

QPoly h_spec(int degree, int pairs) {
    if (degree < 0) return QPoly{};
    if (degree == 0) return QPoly(1);
    if (pairs <= 0) return QPoly{};
    std::vector<Integer> qc(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i)
        qc[static_cast<std::size_t>(i)] = binomial(pairs - 1 + i, pairs - 1) * binomial(pairs - 1 + degree - i, pairs - 1);
    return QPoly::from_q_coeffs(qc);
}

QPoly h_spec_oracle(int degree, int pairs) {
    if (pairs < 0) throw NegativePairCount("h_spec_oracle: negative pair count");
    if (degree < 0) return QPoly{};
    // H[d] accumulates h_d of the alphabet built so far; adding a variable v
    // maps H[d] to sum_a v^a H[d-a], done in place in ascending d.
    std::vector<QPoly> H(static_cast<std::size_t>(degree) + 1);
    H[0] = QPoly(1);
    const QPoly q = QPoly::from_q_coeffs({Integer(0), Integer(1)});
    for (int copy = 0; copy < pairs; ++copy) {
        for (int d = 1; d <= degree; ++d)
            H[static_cast<std::size_t>(d)] += H[static_cast<std::size_t>(d - 1)];
        for (int d = 1; d <= degree; ++d)
            H[static_cast<std::size_t>(d)] += q * H[static_cast<std::size_t>(d - 1)];
    }
    return H[static_cast<std::size_t>(degree)];
}

}  // namespace qfaulhaber
