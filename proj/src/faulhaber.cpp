#include "qfaulhaber/faulhaber.hpp"

#include <sstream>
#include <utility>

#include "qfaulhaber/bipoly.hpp"
#include "qfaulhaber/format.hpp"

namespace qfaulhaber {

namespace {

// [2k]/[2] = 1 + q^2 + ... + q^{2(k-1)}, the exact quotient (1-q^{2k})/(1-q^2).
TPoly even_geometric(int k) {
    std::vector<Integer> cs(static_cast<std::size_t>(4 * (k - 1)) + 1, Integer(0));
    for (int i = 0; i < k; ++i) cs[static_cast<std::size_t>(4 * i)] = 1;
    return TPoly(std::move(cs));
}

bool palindromic_over_support(const QPoly& p) {
    if (p.is_zero()) return true;
    const TPoly& t = p.poly();
    int lo = t.low_degree() / 2;
    int hi = p.q_degree();
    for (int i = 0; lo + i <= hi - i; ++i)
        if (p.coeff_q(lo + i) != p.coeff_q(hi - i)) return false;
    return true;
}

}  // namespace

TPoly power_sum(int m, int n) {
    if (m < 0 || n < 0) throw NegativeArgument("power_sum: negative argument");
    if (n == 0) return TPoly{};
    if (m == 0) throw NegativeArgument("power_sum: [k]^{m-1} needs m >= 1 when n >= 1");
    TPoly acc;
    for (int k = 1; k <= n; ++k) {
        TPoly term = even_geometric(k) * pow(q_int(k), m - 1);
        acc += term.shifted((m + 1) * (n - k));
    }
    return acc;
}

PolyMatrix<QPoly> faulhaber_h_matrix(int dim) {
    if (dim < 0) throw IndexOutOfRange("faulhaber_h_matrix: negative dimension");
    PolyMatrix<QPoly> a(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k)
        for (int m = 0; m < dim; ++m)
            a.at(static_cast<std::size_t>(k), static_cast<std::size_t>(m)) = h_spec(2 * m - k, k - m + 1);
    return a;
}

QPoly faulhaber_p(int m, int k) {
    if (k < 0 || m < k) throw IndexOutOfRange("faulhaber_p: need 0 <= k <= m");
    if (k == 0) return QPoly(1);
    PolyMatrix<QPoly> a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                h_spec(m - k - i + 2 * j - 1, i - j + 2);
    return det_bareiss(std::move(a));
}

namespace {

QPoly p_from_inverse_entry(int m, int k, const RationalFunction& entry) {
    RationalFunction scaled = entry * RationalFunction(q_factorial(m + 1)) /
                              RationalFunction(q_factorial(m - k));
    if (k % 2 == 1) scaled = -scaled;
    if (!scaled.is_polynomial())
        throw NotPolynomial("faulhaber_p_via_inverse: scaled inverse entry not in Z[q]");
    return QPoly(scaled.num());
}

}  // namespace

QPoly faulhaber_p_via_inverse(int m, int k, int dim) {
    if (k < 0 || m < k || dim <= m)
        throw IndexOutOfRange("faulhaber_p_via_inverse: need 0 <= k <= m < dim");
    PolyMatrix<QPoly> a = faulhaber_h_matrix(dim);
    RationalFunction entry = inverse_entry_formula(a, static_cast<std::size_t>(m),
                                                   static_cast<std::size_t>(m - k));
    return p_from_inverse_entry(m, k, entry);
}

std::map<std::pair<int, int>, QPoly> faulhaber_p_table_via_inverse(int dim) {
    PolyMatrix<QPoly> h = faulhaber_h_matrix(dim);
    PolyMatrix<RationalFunction> a(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) a.at(i, j) = RationalFunction(h.at(i, j));
    PolyMatrix<RationalFunction> inv = invert_lower_triangular(a);
    std::map<std::pair<int, int>, QPoly> out;
    for (int m = 0; m < dim; ++m)
        for (int k = 0; k <= m; ++k)
            out.emplace(std::make_pair(m, k),
                        p_from_inverse_entry(m, k, inv.at(static_cast<std::size_t>(m),
                                                          static_cast<std::size_t>(m - k))));
    return out;
}

Verdict verify_eq2(int m, int n) {
    if (m < 0 || n < 1) throw IndexOutOfRange("verify_eq2: need m >= 0, n >= 1");
    TPoly lhs = q_int(2).poly() * q_factorial(m + 1).poly() * power_sum(2 * m + 1, n);
    TPoly nn1 = q_int(n).poly() * q_int(n + 1).poly();
    TPoly rhs;
    for (int k = 0; k <= m; ++k) {
        TPoly term = q_factorial(k).poly() * faulhaber_p(m, m - k).poly();
        term = term.shifted(2 * (m - k) * n);
        term *= pow(nn1, k + 1);
        if ((m - k) % 2 == 1) rhs -= term;
        else rhs += term;
    }
    if (lhs == rhs) return Verdict::ok();
    std::ostringstream os;
    os << "m=" << m << " n=" << n << ": lhs = " << to_q_string(lhs) << "; rhs = " << to_q_string(rhs);
    return Verdict::fail(os.str());
}

Verdict verify_inverse_theorem(int dim) {
    if (dim < 1) throw IndexOutOfRange("verify_inverse_theorem: need dim >= 1");
    PolyMatrix<QPoly> h = faulhaber_h_matrix(dim);
    const std::size_t n = h.rows();
    PolyMatrix<RationalFunction> a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = RationalFunction(h.at(i, j));
    for (int k = 0; k < dim; ++k)
        for (int m = 0; m <= k; ++m) {
            RationalFunction entry(faulhaber_p(k, k - m).poly() * q_factorial(m).poly(),
                                   q_factorial(k + 1).poly());
            if ((k - m) % 2 == 1) entry = -entry;
            b.at(static_cast<std::size_t>(k), static_cast<std::size_t>(m)) = std::move(entry);
        }
    PolyMatrix<RationalFunction> prod = a * b;
    if (prod == PolyMatrix<RationalFunction>::identity(n)) return Verdict::ok();
    std::ostringstream os;
    os << "dim=" << dim << ": A*B differs from the identity";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RationalFunction expect = (i == j) ? RationalFunction(1) : RationalFunction();
            if (prod.at(i, j) != expect) {
                os << "; entry (" << i << "," << j << ") = " << prod.at(i, j);
                return Verdict::fail(os.str());
            }
        }
    return Verdict::fail(os.str());
}

namespace {

BiPoly lemma1_lhs(int m) {
    return binomial_power(BinomialBase::OneMinusQX, m + 1) -
           binomial_power(BinomialBase::QMinusX, m + 1);
}

}  // namespace

Verdict verify_lemma1(int m) {
    if (m < 0) throw NegativeArgument("verify_lemma1: negative m");
    const BiPoly lhs = lemma1_lhs(m);
    const TPoly one_minus_q{1, 0, -1};
    const BiPoly one_minus_x(std::vector<TPoly>{TPoly(1), TPoly(-1)});
    const BiPoly one_plus_x(std::vector<TPoly>{TPoly(1), TPoly(1)});
    BiPoly rhs;
    for (int k = 0; 2 * k <= m; ++k) {
        TPoly scalar = h_spec(m - 2 * k, k + 1).poly() * pow(one_minus_q, 2 * k + 1);
        BiPoly term = BiPoly(std::move(scalar)) * pow(one_minus_x, m - 2 * k) * one_plus_x;
        rhs += BiPoly::monomial(TPoly(1), k) * term;
    }
    if (lhs == rhs) return Verdict::ok();
    std::ostringstream os;
    os << "m=" << m << ": bivariate sides differ";
    return Verdict::fail(os.str());
}

Verdict lemma1_coefficient_check(int m) {
    if (m < 0) throw NegativeArgument("lemma1_coefficient_check: negative m");
    const BiPoly lhs = lemma1_lhs(m);
    std::ostringstream notes;
    for (int r = 0; r <= m + 1; ++r)
        for (int s = 0; s <= m + 1; ++s) {
            Integer actual = coeff_qx(lhs, r, s);
            const bool diag = (s == r);
            const bool anti = (s == m - r + 1);
            if (diag && anti) {
                notes << "collision r=s=" << r << " coeff=" << actual.get_str() << "; ";
                continue;
            }
            Integer expected = 0;
            if (diag) {
                expected = binomial(m + 1, r);
                if (r % 2 == 1) expected = -expected;
            } else if (anti) {
                expected = binomial(m + 1, r);
                if ((r + m) % 2 == 1) expected = -expected;
            }
            if (actual != expected) {
                std::ostringstream os;
                os << "m=" << m << " r=" << r << " s=" << s << ": coefficient " << actual.get_str()
                   << " differs from closed form " << expected.get_str();
                return Verdict::fail(os.str());
            }
        }
    return Verdict::ok(notes.str());
}

Verdict check_symmetry(int m, int k) {
    QPoly p = faulhaber_p(m, k);
    if (palindromic_over_support(p)) return Verdict::ok();
    std::ostringstream os;
    os << "P[" << m << "," << k << "] = " << to_q_string(p.poly()) << " is not palindromic";
    return Verdict::fail(os.str());
}

Verdict check_nonnegativity(int m, int k) {
    QPoly p = faulhaber_p(m, k);
    for (int i = 0; i <= p.q_degree(); ++i)
        if (p.coeff_q(i) < 0) {
            std::ostringstream os;
            os << "P[" << m << "," << k << "] = " << to_q_string(p.poly())
               << " has a negative coefficient at q^" << i;
            return Verdict::fail(os.str());
        }
    return Verdict::ok();
}

Verdict verify_classical_specialization(int m, int n) {
    if (m < 0 || n < 1) throw IndexOutOfRange("verify_classical_specialization: need m >= 0, n >= 1");
    Integer lhs = 0;
    for (int j = 1; j <= n; ++j) lhs += integer_pow(Integer(j), static_cast<unsigned long>(2 * m + 1));
    lhs *= 2 * integer_factorial(static_cast<unsigned long>(m + 1));
    Integer rhs = 0;
    const Integer nn1 = Integer(n) * Integer(n + 1);
    for (int k = 0; k <= m; ++k) {
        Integer term = integer_factorial(static_cast<unsigned long>(k)) *
                       faulhaber_p(m, m - k).poly().eval(1) *
                       integer_pow(nn1, static_cast<unsigned long>(k + 1));
        if ((m - k) % 2 == 1) rhs -= term;
        else rhs += term;
    }
    if (lhs == rhs) return Verdict::ok();
    std::ostringstream os;
    os << "m=" << m << " n=" << n << ": " << lhs.get_str() << " != " << rhs.get_str();
    return Verdict::fail(os.str());
}

FaulhaberTable::FaulhaberTable(int m_max) : m_max_(m_max) {
    if (m_max < 0) throw IndexOutOfRange("FaulhaberTable: negative m_max");
}

FaulhaberTable FaulhaberTable::build(int m_max) {
    FaulhaberTable t(m_max);
    for (int m = 0; m <= m_max; ++m)
        for (int k = 0; k <= m; ++k) t.insert(m, k, faulhaber_p(m, k), Provenance::Determinant);
    return t;
}

void FaulhaberTable::insert(int m, int k, QPoly value, Provenance provenance) {
    if (k < 0 || m < k || m > m_max_) throw IndexOutOfRange("FaulhaberTable::insert");
    if (!palindromic_over_support(value))
        throw Error("FaulhaberTable: cell failed the palindromicity invariant");
    auto it = cells_.find({m, k});
    if (it == cells_.end()) {
        FaulhaberCell cell;
        cell.q_degree = value.q_degree();
        cell.value = std::move(value);
        cell.provenances.push_back(provenance);
        cells_.emplace(std::make_pair(m, k), std::move(cell));
        return;
    }
    if (it->second.value != value)
        throw Error("FaulhaberTable: provenances disagree on a cell");
    it->second.provenances.push_back(provenance);
}

const FaulhaberCell& FaulhaberTable::cell(int m, int k) const {
    auto it = cells_.find({m, k});
    if (it == cells_.end()) throw IndexOutOfRange("FaulhaberTable::cell");
    return it->second;
}

bool FaulhaberTable::has(int m, int k) const { return cells_.count({m, k}) != 0; }

std::vector<LogConcavityEntry> logconcavity_report(int m_max) {
    if (m_max < 1) throw IndexOutOfRange("logconcavity_report: need m_max >= 1");
    std::vector<LogConcavityEntry> out;
    for (int m = 0; m <= m_max; ++m)
        for (int k = 0; k <= m; ++k) {
            QPoly p = faulhaber_p(m, k);
            LogConcavityEntry e{m, k, true};
            for (int i = 1; i < p.q_degree(); ++i)
                if (p.coeff_q(i) * p.coeff_q(i) < p.coeff_q(i - 1) * p.coeff_q(i + 1)) {
                    e.log_concave = false;
                    break;
                }
            out.push_back(e);
        }
    return out;
}

}  // namespace qfaulhaber
