#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfaulhaber/faulhaber.hpp"

using namespace qfaulhaber;

namespace {

QPoly qp(std::initializer_list<long> q_coeffs) {
    std::vector<Integer> cs;
    for (long c : q_coeffs) cs.emplace_back(c);
    return QPoly::from_q_coeffs(cs);
}

}  // namespace

TEST_CASE("power sums") {
    CHECK(power_sum(3, 1) == TPoly(1));
    CHECK(power_sum(1, 2) == TPoly{1, 0, 1, 0, 1});
    CHECK(power_sum(7, 0) == TPoly{});
    CHECK(power_sum(0, 0) == TPoly{});
    CHECK(power_sum(3, 2) == TPoly{1, 0, 2, 0, 3, 0, 2, 0, 1});
    CHECK(power_sum(5, 2) == TPoly{1, 0, 4, 0, 7, 0, 9, 0, 7, 0, 4, 0, 1});
    CHECK_THROWS_AS(power_sum(0, 2), NegativeArgument);
    CHECK_THROWS_AS(power_sum(-1, 1), NegativeArgument);
}

TEST_CASE("the [2k]/[2] factor is the exact quotient (1-q^2k)/(1-q^2)") {
    // power_sum(1, n) exposes the factor directly: its k-th summand is
    // [2k]/[2] shifted by t^{n-k}, so at n = k the top term is the factor.
    const TPoly one_minus_q2{1, 0, 0, 0, -1};
    for (int k = 1; k <= 10; ++k) {
        TPoly one_minus_q2k = TPoly(1) - TPoly::monomial(1, 4 * k);
        TPoly quotient = exact_div(one_minus_q2k, one_minus_q2);
        CHECK(power_sum(1, k) - power_sum(1, k - 1).shifted(2) == quotient);
    }
}

TEST_CASE("even exponents produce genuine half powers") {
    // S_{2,2} = 1 + q + q^2 + q^3 + q^{3/2}
    TPoly s = power_sum(2, 2);
    CHECK_FALSE(s.is_q_pure());
    CHECK(s == TPoly{1, 0, 1, 1, 1, 0, 1});
    // Odd m stays inside Z[q].
    for (int m = 1; m <= 9; m += 2)
        for (int n = 0; n <= 5; ++n) CHECK(power_sum(m, n).is_q_pure());
}

TEST_CASE("h-matrix shape") {
    PolyMatrix<QPoly> one = faulhaber_h_matrix(1);
    CHECK(one.at(0, 0) == QPoly(1));

    PolyMatrix<QPoly> two = faulhaber_h_matrix(2);
    CHECK(two.at(0, 0) == QPoly(1));
    CHECK(two.at(1, 1) == qp({1, 1}));

    PolyMatrix<QPoly> three = faulhaber_h_matrix(3);
    CHECK(three.at(2, 0) == QPoly{});

    PolyMatrix<QPoly> six = faulhaber_h_matrix(6);
    for (int i = 0; i < 6; ++i) {
        CHECK(six.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) == q_int(i + 1));
        for (int j = i + 1; j < 6; ++j)
            CHECK(six.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == QPoly{});
    }
}

TEST_CASE("faulhaber coefficients from the determinant") {
    for (int m = 0; m <= 8; ++m) CHECK(faulhaber_p(m, 0) == QPoly(1));
    CHECK(faulhaber_p(1, 1) == QPoly{});
    CHECK(faulhaber_p(2, 1) == QPoly(1));
    CHECK(faulhaber_p(3, 1) == qp({2, 2}));
    CHECK(faulhaber_p(3, 2) == qp({2, 2}));
    CHECK(faulhaber_p(4, 1) == qp({3, 4, 3}));
    CHECK(faulhaber_p(4, 2) == qp({5, 13, 13, 5}));
    CHECK(faulhaber_p(4, 3) == qp({5, 13, 13, 5}));
    CHECK(faulhaber_p(5, 2) == qp({9, 28, 48, 48, 28, 9}));
    CHECK(faulhaber_p(5, 3) == qp({14, 64, 136, 172, 136, 64, 14}));
    CHECK(faulhaber_p(6, 3) == qp({28, 145, 407, 760, 1020, 1020, 760, 407, 145, 28}));
    CHECK(faulhaber_p(6, 4) == qp({42, 285, 950, 2047, 3154, 3628, 3154, 2047, 950, 285, 42}));
    for (int m = 1; m <= 10; ++m) CHECK(faulhaber_p(m, m) == QPoly{});
    CHECK_THROWS_AS(faulhaber_p(2, 3), IndexOutOfRange);
    CHECK_THROWS_AS(faulhaber_p(2, -1), IndexOutOfRange);
}

TEST_CASE("faulhaber coefficients from the matrix inverse") {
    CHECK(faulhaber_p_via_inverse(1, 0, 4) == QPoly(1));
    CHECK(faulhaber_p_via_inverse(3, 1, 5) == qp({2, 2}));
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= m; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(faulhaber_p_via_inverse(m, k, 7) == faulhaber_p(m, k));
        }
    auto table = faulhaber_p_table_via_inverse(7);
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= m; ++k) CHECK(table.at({m, k}) == faulhaber_p(m, k));
    CHECK_THROWS_AS(faulhaber_p_via_inverse(3, 1, 3), IndexOutOfRange);
}

TEST_CASE("cleared power-sum identity") {
    CHECK(verify_eq2(1, 1).pass);
    for (int n = 1; n <= 6; ++n) CHECK(verify_eq2(0, n).pass);
    for (int m = 0; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(verify_eq2(m, n).pass);
        }
}

TEST_CASE("matrix inverse theorem") {
    CHECK(verify_inverse_theorem(1).pass);
    CHECK(verify_inverse_theorem(2).pass);
    CHECK(verify_inverse_theorem(4).pass);
}

TEST_CASE("bivariate lemma") {
    for (int m = 0; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(verify_lemma1(m).pass);
    }
}

TEST_CASE("lemma coefficient closed form") {
    for (int m = 0; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(lemma1_coefficient_check(m).pass);
    }
    // Odd m has the collision cell s = r = (m+1)/2; its value is recorded.
    Verdict v = lemma1_coefficient_check(1);
    CHECK(v.detail.find("collision r=s=1 coeff=0") != std::string::npos);
    CHECK(lemma1_coefficient_check(0).detail.empty());
}

TEST_CASE("corollary properties") {
    CHECK(check_symmetry(3, 1).pass);
    CHECK(check_symmetry(1, 1).pass);
    CHECK(check_nonnegativity(3, 1).pass);
    CHECK(check_nonnegativity(1, 1).pass);
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= m; ++k) {
            CHECK(check_symmetry(m, k).pass);
            CHECK(check_nonnegativity(m, k).pass);
        }
}

TEST_CASE("classical specialization at q = 1") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(verify_classical_specialization(m, n).pass);
        }
}

TEST_CASE("faulhaber table invariants") {
    FaulhaberTable table = FaulhaberTable::build(3);
    CHECK(table.cell(3, 1).value == qp({2, 2}));
    CHECK(table.cell(3, 1).q_degree == 1);
    CHECK(table.cell(1, 1).q_degree == -1);
    CHECK(table.has(2, 2));
    CHECK_FALSE(table.has(4, 0));
    CHECK_THROWS_AS(table.cell(4, 0), IndexOutOfRange);

    // A second provenance with the same value is recorded, a differing one rejected.
    FaulhaberTable t2(3);
    t2.insert(3, 1, qp({2, 2}), Provenance::Determinant);
    t2.insert(3, 1, qp({2, 2}), Provenance::LgvBruteforce);
    CHECK(t2.cell(3, 1).provenances.size() == 2);
    CHECK_THROWS_AS(t2.insert(3, 1, qp({2, 3, 2}), Provenance::Inverse), Error);
    // Non-palindromic values violate the cell invariant outright.
    CHECK_THROWS_AS(t2.insert(2, 1, qp({1, 2}), Provenance::Determinant), Error);
}

TEST_CASE("log-concavity report") {
    auto entries = logconcavity_report(5);
    CHECK(entries.size() == 21);
    for (const auto& e : entries) {
        CHECK(e.m <= 5);
        CHECK(e.k <= e.m);
    }
}
