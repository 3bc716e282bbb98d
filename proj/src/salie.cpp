#include "qfaulhaber/salie.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "qfaulhaber/format.hpp"
#include "qfaulhaber/qcombinatorics.hpp"

namespace qfaulhaber {

TPoly t_sum(int m, int n) {
    if (m < 0 || n < 0) throw NegativeArgument("t_sum: negative argument");
    if (n == 0) return TPoly{};
    if (m == 0) throw NegativeArgument("t_sum: [k]^{m-1} needs m >= 1 when n >= 1");
    TPoly acc;
    for (int k = 1; k <= n; ++k) {
        std::vector<Integer> geo(static_cast<std::size_t>(4 * (k - 1)) + 1, Integer(0));
        for (int i = 0; i < k; ++i) geo[static_cast<std::size_t>(4 * i)] = 1;
        TPoly term = TPoly(std::move(geo)) * pow(q_int(k), m - 1);
        term = term.shifted((m + 1) * (n - k));
        if ((n - k) % 2 == 1) acc -= term;
        else acc += term;
    }
    return acc;
}

namespace {

TPoly one_plus_t_odd(int j) {
    // 1 + t^{2j+1}
    std::vector<Integer> cs(static_cast<std::size_t>(2 * j + 1) + 1, Integer(0));
    cs.front() = 1;
    cs.back() = 1;
    return TPoly(std::move(cs));
}

// Left side of the cleared expansion identity at probe n.
TPoly cleared_lhs(int m, int n) {
    TPoly lhs = t_sum(2 * m, n) * q_int(2).poly();
    for (int j = 1; j <= m; ++j) lhs *= one_plus_t_odd(j);
    return lhs;
}

// Known factor multiplying g_{k,m} on the right side at probe n.
TPoly cleared_term_factor(int m, int k, int n) {
    TPoly f = one_plus_t_odd(n) * pow(TPoly{1, 1}, m - k);
    for (int j = 1; j < k; ++j) f *= one_plus_t_odd(j);
    f = f.shifted(2 * n * (m - k));
    f *= pow(q_int(n).poly() * q_int(n + 1).poly(), k);
    if ((m - k) % 2 == 1) f = -f;
    return f;
}

bool identity_holds(int m, int n, const std::map<int, TPoly>& g) {
    TPoly rhs;
    for (const auto& [k, gk] : g) rhs += cleared_term_factor(m, k, n) * gk;
    return cleared_lhs(m, n) == rhs;
}

struct SolveOutcome {
    bool consistent = true;
    bool unique = true;
    std::map<int, TPoly> g;  // valid only when consistent && unique
};

// Exact Gauss-Jordan elimination of the stacked probe equations. Unknowns
// are the t-coefficients of each g_k, laid out k-major.
SolveOutcome solve_for_g(int m, const std::vector<int>& probes, const std::vector<int>& bounds) {
    std::vector<std::size_t> offset(static_cast<std::size_t>(m) + 1, 0);
    std::size_t unknowns = 0;
    for (int k = 1; k <= m; ++k) {
        offset[static_cast<std::size_t>(k)] = unknowns;
        unknowns += static_cast<std::size_t>(bounds[static_cast<std::size_t>(k)]) + 1;
    }
    std::vector<std::vector<Rational>> rows;
    for (int n : probes) {
        TPoly lhs = cleared_lhs(m, n);
        std::vector<TPoly> factors(static_cast<std::size_t>(m) + 1);
        int max_e = lhs.degree();
        for (int k = 1; k <= m; ++k) {
            factors[static_cast<std::size_t>(k)] = cleared_term_factor(m, k, n);
            max_e = std::max(max_e, factors[static_cast<std::size_t>(k)].degree() +
                                        bounds[static_cast<std::size_t>(k)]);
        }
        for (int e = 0; e <= max_e; ++e) {
            std::vector<Rational> row(unknowns + 1);
            bool nonzero = false;
            for (int k = 1; k <= m; ++k) {
                const TPoly& f = factors[static_cast<std::size_t>(k)];
                for (int d = 0; d <= bounds[static_cast<std::size_t>(k)]; ++d) {
                    const Integer& c = f.coeff(e - d);
                    if (c == 0) continue;
                    row[offset[static_cast<std::size_t>(k)] + static_cast<std::size_t>(d)] = Rational(c);
                    nonzero = true;
                }
            }
            if (lhs.coeff(e) != 0) {
                row[unknowns] = Rational(lhs.coeff(e));
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    SolveOutcome out;
    std::vector<std::optional<std::size_t>> pivot_row_of_col(unknowns);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        Rational inv = rows[rank][col];
        for (std::size_t j = col; j <= unknowns; ++j) rows[rank][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j <= unknowns; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i][unknowns] != 0) {
            out.consistent = false;
            return out;
        }
    for (std::size_t col = 0; col < unknowns; ++col)
        if (!pivot_row_of_col[col]) {
            out.unique = false;
            return out;
        }

    for (int k = 1; k <= m; ++k) {
        std::vector<Integer> cs(static_cast<std::size_t>(bounds[static_cast<std::size_t>(k)]) + 1);
        for (int d = 0; d <= bounds[static_cast<std::size_t>(k)]; ++d) {
            const std::size_t col = offset[static_cast<std::size_t>(k)] + static_cast<std::size_t>(d);
            Rational v = rows[*pivot_row_of_col[col]][unknowns];
            if (v.get_den() != 1) {
                // The ansatz demands g in Z[t]; a fractional solution cannot
                // be represented and is reported as no fit.
                out.consistent = false;
                return out;
            }
            cs[static_cast<std::size_t>(d)] = v.get_num();
        }
        out.g.emplace(k, TPoly(std::move(cs)));
    }
    return out;
}

}  // namespace

SalieFit salie_fit(int m, int n_probes, int degree_bound) {
    if (m < 1) throw NegativeArgument("salie_fit: need m >= 1");
    if (n_probes < 0) n_probes = m + 3;
    if (n_probes < m + 2) throw UnderDetermined("salie_fit: need at least m + 2 probes");
    const bool explicit_bound = degree_bound >= 0;
    const int bound_cap = 8 * (m + 1);
    const int probe_cap = 3 * (m + 2);

    std::vector<int> bounds(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 1; k <= m; ++k)
        bounds[static_cast<std::size_t>(k)] = explicit_bound ? degree_bound : 2 * (m - k) + 2;

    for (;;) {
        std::vector<int> probes;
        for (int n = 1; n <= n_probes; ++n) probes.push_back(n);
        SolveOutcome out = solve_for_g(m, probes, bounds);

        if (out.consistent && !out.unique) {
            if (n_probes < probe_cap) {
                n_probes += 2;
                continue;
            }
            throw UnderDetermined("salie_fit: solution space not unique at the probe cap");
        }

        bool good = out.consistent;
        if (good) {
            // Held-out residual check on two fresh probes.
            good = identity_holds(m, n_probes + 1, out.g) && identity_holds(m, n_probes + 2, out.g);
        }
        if (good) {
            SalieFit fit;
            fit.m = m;
            fit.g = std::move(out.g);
            fit.degree_bound_used = *std::max_element(bounds.begin() + 1, bounds.end());
            fit.probes_used = std::move(probes);
            fit.residual_ok = true;
            return fit;
        }

        if (explicit_bound)
            throw NoConsistentFit("salie_fit: no polynomial solution at the requested degree bound");
        bool escalated = false;
        for (int k = 1; k <= m; ++k) {
            int& b = bounds[static_cast<std::size_t>(k)];
            if (b < bound_cap) {
                b = std::min(2 * b, bound_cap);
                escalated = true;
            }
        }
        if (!escalated)
            throw NoConsistentFit("salie_fit: inconsistent even at the maximum degree bound");
    }
}

std::vector<TPoly> table1_column(int m) {
    const TPoly one(1);
    const TPoly a{2, -1, 2};               // 2q - q^(1/2) + 2
    const TPoly b{5, -1, 9, -1, 5};        // 5q^2 - q^(3/2) + 9q - q^(1/2) + 5
    const TPoly c{1, -1, 1};               // q - q^(1/2) + 1
    const TPoly d{3, -2, 4, -2, 3};        // 3q^2 - 2q^(3/2) + 4q - 2q^(1/2) + 3
    switch (m) {
        case 1: return {one};
        case 2: return {one, one};
        case 3: return {a, a, one};
        case 4: return {b * c, b * c, d, one};
        default: throw IndexOutOfRange("table1_column: tabulated columns are m = 1..4");
    }
}

Verdict verify_table1() {
    std::ostringstream os;
    bool pass = true;
    for (int m = 1; m <= 4; ++m) {
        SalieFit fit = salie_fit(m);
        std::vector<TPoly> expected = table1_column(m);
        for (int k = 1; k <= m; ++k) {
            const TPoly& got = fit.g.at(k);
            const TPoly& want = expected[static_cast<std::size_t>(k - 1)];
            if (got != want) {
                pass = false;
                os << "g[" << k << "," << m << "] fitted " << to_q_string(got) << ", table has "
                   << to_q_string(want) << "; ";
            }
        }
    }
    return pass ? Verdict::ok() : Verdict::fail(os.str());
}

std::vector<SalieSignEntry> salie_sign_report(int m_max) {
    if (m_max < 1) throw NegativeArgument("salie_sign_report: need m_max >= 1");
    std::vector<SalieSignEntry> out;
    for (int m = 1; m <= m_max; ++m) {
        SalieFit fit = salie_fit(m);
        for (const auto& [k, g] : fit.g) {
            SalieSignEntry e;
            e.m = m;
            e.k = k;
            e.g = g;
            for (const Integer& c : g.coeffs())
                if (c < 0) {
                    e.has_negative = true;
                    break;
                }
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace qfaulhaber
