#include "qfaulhaber/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "qfaulhaber/faulhaber.hpp"
#include "qfaulhaber/format.hpp"
#include "qfaulhaber/lgv.hpp"
#include "qfaulhaber/salie.hpp"

namespace qfaulhaber {

bool VerifyReport::overall() const {
    for (const VerifyCase& c : cases)
        if (!c.pass) return false;
    return true;
}

double VerifyReport::total_seconds() const {
    double s = 0.0;
    for (const VerifyCase& c : cases) s += c.seconds;
    return s;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"eq2",    "lemma1", "inverse", "lgv",
                                                "table1", "props",  "all"};
    return names;
}

namespace {

void run_case(VerifyReport& report, const std::string& id, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyCase c;
    c.id = id;
    try {
        Verdict v = body();
        c.pass = v.pass;
        c.detail = v.detail;
    } catch (const Error& e) {
        c.pass = false;
        c.detail = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.cases.push_back(std::move(c));
}

std::string case_id(const std::string& stem, std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    os << stem;
    for (const auto& [k, v] : kv) os << " " << k << "=" << v;
    return os.str();
}

void suite_eq2(VerifyReport& r, const SuiteRanges& ranges) {
    const int m_max = ranges.m_max < 0 ? 6 : ranges.m_max;
    const int n_max = ranges.n_max < 0 ? 6 : ranges.n_max;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n)
            run_case(r, case_id("eq2", {{"m", m}, {"n", n}}), [=] { return verify_eq2(m, n); });
}

void suite_lemma1(VerifyReport& r, const SuiteRanges& ranges) {
    const int m_max = ranges.m_max < 0 ? 12 : ranges.m_max;
    for (int m = 0; m <= m_max; ++m)
        run_case(r, case_id("lemma1", {{"m", m}}), [=] { return verify_lemma1(m); });
    const int coeff_max = std::min(m_max, 10);
    for (int m = 0; m <= coeff_max; ++m)
        run_case(r, case_id("lemma1-coefficients", {{"m", m}}),
                 [=] { return lemma1_coefficient_check(m); });
}

void suite_inverse(VerifyReport& r, const SuiteRanges& ranges) {
    const int dim_max = ranges.dim_max < 0 ? 8 : ranges.dim_max;
    for (int dim = 1; dim <= dim_max; ++dim)
        run_case(r, case_id("inverse", {{"dim", dim}}), [=] { return verify_inverse_theorem(dim); });
}

void suite_lgv(VerifyReport& r, const SuiteRanges& ranges) {
    const int m_max = ranges.m_max < 0 ? 8 : ranges.m_max;
    const int k_max = ranges.k_max < 0 ? 3 : ranges.k_max;
    const std::uint64_t budget = ranges.budget;
    for (int k = 1; k <= k_max; ++k)
        for (int m = k; m <= m_max; ++m)
            run_case(r, case_id("lgv-triangle", {{"m", m}, {"k", k}}), [=] {
                QPoly by_det = lgv_determinant(m, k, WeightParity::Even);
                QPoly by_formula = faulhaber_p(m, k);
                QPoly by_families = bruteforce_family_sum(m, k, WeightParity::Even, budget);
                if (by_det == by_formula && by_formula == by_families) return Verdict::ok();
                std::ostringstream os;
                os << "determinant " << to_q_string(by_det) << "; closed form "
                   << to_q_string(by_formula) << "; brute force " << to_q_string(by_families);
                return Verdict::fail(os.str());
            });
    const int inv_m_max = std::min(m_max, 7);
    for (int k = 1; k <= std::min(k_max, 3); ++k)
        for (int m = k; m <= inv_m_max; ++m)
            run_case(r, case_id("lgv-involution", {{"m", m}, {"k", k}}),
                     [=] { return involution_check(m, k, budget); });
}

void suite_table1(VerifyReport& r, const SuiteRanges&) {
    run_case(r, "table1", [] { return verify_table1(); });
}

Verdict h_oracle_sweep(int j_max, int r_max) {
    for (int j = 0; j <= j_max; ++j)
        for (int rr = 0; rr <= r_max; ++rr)
            if (h_spec(j, rr) != h_spec_oracle(j, rr)) {
                std::ostringstream os;
                os << "h_spec(" << j << "," << rr << ") differs from the expansion oracle";
                return Verdict::fail(os.str());
            }
    return Verdict::ok();
}

Verdict det_oracle_trials(int trials) {
    std::mt19937_64 rng(20240001);
    std::uniform_int_distribution<int> dim_dist(0, 5);
    std::uniform_int_distribution<int> deg_dist(0, 3);
    std::uniform_int_distribution<long> coeff_dist(-9, 9);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = static_cast<std::size_t>(dim_dist(rng));
        PolyMatrix<TPoly> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Integer> cs(static_cast<std::size_t>(deg_dist(rng)) + 1);
                for (Integer& c : cs) c = coeff_dist(rng);
                m.at(i, j) = TPoly(std::move(cs));
            }
        if (det_bareiss(m) != det_cofactor(m)) {
            std::ostringstream os;
            os << "determinant oracle mismatch at trial " << t;
            return Verdict::fail(os.str());
        }
    }
    return Verdict::ok();
}

Verdict q_bracket_laws(int bound) {
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b) {
            QPoly lhs = q_int(a + b);
            QPoly rhs = q_int(a) + QPoly(TPoly::monomial(1, 2 * a)) * q_int(b);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "q-bracket addition fails at a=" << a << " b=" << b;
                return Verdict::fail(os.str());
            }
        }
    for (int k = 1; k <= bound; ++k)
        if (q_factorial(k) != q_factorial(k - 1) * q_int(k)) {
            std::ostringstream os;
            os << "q-factorial recurrence fails at k=" << k;
            return Verdict::fail(os.str());
        }
    return Verdict::ok();
}

void suite_props(VerifyReport& r, const SuiteRanges& ranges) {
    const int m_max = ranges.m_max < 0 ? 10 : ranges.m_max;
    for (int m = 0; m <= m_max; ++m)
        run_case(r, case_id("corollary", {{"m", m}}), [=] {
            for (int k = 0; k <= m; ++k) {
                Verdict s = check_symmetry(m, k);
                if (!s.pass) return s;
                Verdict nn = check_nonnegativity(m, k);
                if (!nn.pass) return nn;
            }
            return Verdict::ok();
        });
    const int route_m_max = std::min(m_max, 8);
    run_case(r, case_id("route-equality", {{"m_max", route_m_max}}), [=] {
        auto table = faulhaber_p_table_via_inverse(route_m_max + 1);
        for (int m = 0; m <= route_m_max; ++m)
            for (int k = 0; k <= m; ++k)
                if (table.at({m, k}) != faulhaber_p(m, k)) {
                    std::ostringstream os;
                    os << "routes disagree at m=" << m << " k=" << k;
                    return Verdict::fail(os.str());
                }
        return Verdict::ok();
    });
    run_case(r, "h-specialization-oracle", [] { return h_oracle_sweep(12, 6); });
    run_case(r, "determinant-oracle", [] { return det_oracle_trials(100); });
    run_case(r, "q-bracket-laws", [] { return q_bracket_laws(20); });
    run_case(r, case_id("log-concavity-report", {{"m_max", std::max(m_max, 1)}}), [=] {
        auto entries = logconcavity_report(std::max(m_max, 1));
        std::size_t concave = 0;
        for (const auto& e : entries)
            if (e.log_concave) ++concave;
        std::ostringstream os;
        os << concave << "/" << entries.size() << " cells observed log-concave (report only)";
        return Verdict::ok(os.str());
    });
}

}  // namespace

VerifyReport run_suite(const std::string& name, const SuiteRanges& ranges) {
    VerifyReport report;
    report.suite = name;
    if (name == "eq2") suite_eq2(report, ranges);
    else if (name == "lemma1") suite_lemma1(report, ranges);
    else if (name == "inverse") suite_inverse(report, ranges);
    else if (name == "lgv") suite_lgv(report, ranges);
    else if (name == "table1") suite_table1(report, ranges);
    else if (name == "props") suite_props(report, ranges);
    else if (name == "all") {
        suite_eq2(report, ranges);
        suite_lemma1(report, ranges);
        suite_inverse(report, ranges);
        suite_lgv(report, ranges);
        suite_table1(report, ranges);
        suite_props(report, ranges);
    } else {
        throw Error("unknown suite: " + name);
    }
    return report;
}

}  // namespace qfaulhaber
