#pragma once

#include <random>

#include "qfaulhaber/tpoly.hpp"

namespace qfaulhaber::testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x51ab5eedULL);
    return gen;
}

/// Random polynomial with degree <= max_degree and coefficients in
/// [-coeff_bound, coeff_bound] (possibly zero).
inline TPoly random_tpoly(int max_degree = 12, long coeff_bound = 99) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::vector<Integer> cs(static_cast<std::size_t>(deg(rng())) + 1);
    for (Integer& c : cs) c = coeff(rng());
    return TPoly(std::move(cs));
}

inline TPoly random_nonzero_tpoly(int max_degree = 12, long coeff_bound = 99) {
    for (;;) {
        TPoly p = random_tpoly(max_degree, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

}  // namespace qfaulhaber::testutil
