#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfaulhaber/faulhaber.hpp"
#include "qfaulhaber/matrix.hpp"
#include "qfaulhaber/qcombinatorics.hpp"
#include "test_util.hpp"

using namespace qfaulhaber;
using testutil::random_tpoly;

namespace {

PolyMatrix<TPoly> random_matrix(std::size_t n, int max_deg = 3, long bound = 9) {
    PolyMatrix<TPoly> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_tpoly(max_deg, bound);
    return m;
}

PolyMatrix<RationalFunction> random_lower_triangular(std::size_t n) {
    PolyMatrix<RationalFunction> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = RationalFunction(q_int(static_cast<int>(i) + 1).poly());
        for (std::size_t j = 0; j < i; ++j)
            m.at(i, j) = RationalFunction(random_tpoly(3, 5));
    }
    return m;
}

}  // namespace

TEST_CASE("determinant conventions") {
    CHECK(det_bareiss(PolyMatrix<TPoly>(0, 0)) == TPoly(1));
    CHECK(det_cofactor(PolyMatrix<TPoly>(0, 0)) == TPoly(1));
    CHECK(det_bareiss(PolyMatrix<TPoly>::identity(3)) == TPoly(1));
    CHECK(det_cofactor(PolyMatrix<TPoly>::identity(3)) == TPoly(1));

    PolyMatrix<TPoly> tri(2, 2);
    tri.at(0, 0) = TPoly(1);
    tri.at(0, 1) = TPoly{1, 0, 1};
    tri.at(1, 1) = TPoly{2, 0, 2};
    CHECK(det_bareiss(tri) == TPoly{2, 0, 2});
    CHECK(det_cofactor(tri) == TPoly{2, 0, 2});
}

TEST_CASE("determinant with zero pivots") {
    PolyMatrix<TPoly> swap2(2, 2);
    swap2.at(0, 1) = TPoly(1);
    swap2.at(1, 0) = TPoly(1);
    CHECK(det_bareiss(swap2) == TPoly(-1));

    PolyMatrix<TPoly> singular(2, 2);
    singular.at(0, 0) = singular.at(0, 1) = TPoly{1, 0, 1};
    singular.at(1, 0) = singular.at(1, 1) = TPoly{1, 0, 1};
    CHECK(det_bareiss(singular) == TPoly{});
}

TEST_CASE("cofactor oracle rejects large matrices") {
    CHECK_THROWS_AS(det_cofactor(PolyMatrix<TPoly>(9, 9)), TooLarge);
}

TEST_CASE("bareiss agrees with the cofactor oracle") {
    std::uniform_int_distribution<std::size_t> dims(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        PolyMatrix<TPoly> m = random_matrix(dims(testutil::rng()));
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant multiplicativity and transpose invariance") {
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = dims(testutil::rng());
        PolyMatrix<TPoly> a = random_matrix(n, 2, 5);
        PolyMatrix<TPoly> b = random_matrix(n, 2, 5);
        CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
        CHECK(det_bareiss(a.transposed()) == det_bareiss(a));
    }
}

TEST_CASE("lower-triangular inversion") {
    auto id = PolyMatrix<RationalFunction>::identity(4);
    CHECK(invert_lower_triangular(id) == id);

    PolyMatrix<RationalFunction> m(2, 2);
    const TPoly a{1, 0, 2}, b{3, 0, 1}, c{0, 0, 5};
    m.at(0, 0) = RationalFunction(a);
    m.at(1, 0) = RationalFunction(b);
    m.at(1, 1) = RationalFunction(c);
    PolyMatrix<RationalFunction> inv = invert_lower_triangular(m);
    CHECK(inv.at(0, 0) == RationalFunction(TPoly(1), a));
    CHECK(inv.at(0, 1) == RationalFunction());
    CHECK(inv.at(1, 0) == -RationalFunction(b, a * c));
    CHECK(inv.at(1, 1) == RationalFunction(TPoly(1), c));
    CHECK(m * inv == PolyMatrix<RationalFunction>::identity(2));
    CHECK(inv * m == PolyMatrix<RationalFunction>::identity(2));
}

TEST_CASE("inversion round-trips") {
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix<RationalFunction> m = random_lower_triangular(4);
        CHECK(invert_lower_triangular(invert_lower_triangular(m)) == m);
    }
}

TEST_CASE("inversion input validation") {
    PolyMatrix<RationalFunction> rect(2, 3);
    CHECK_THROWS_AS(invert_lower_triangular(rect), NotTriangular);

    PolyMatrix<RationalFunction> upper = PolyMatrix<RationalFunction>::identity(2);
    upper.at(0, 1) = RationalFunction(1);
    CHECK_THROWS_AS(invert_lower_triangular(upper), NotTriangular);

    PolyMatrix<RationalFunction> singular = PolyMatrix<RationalFunction>::identity(3);
    singular.at(1, 1) = RationalFunction();
    CHECK_THROWS_AS(invert_lower_triangular(singular), SingularDiagonal);
}

TEST_CASE("inverse entry formula closed cases") {
    PolyMatrix<TPoly> m(3, 3);
    m.at(0, 0) = TPoly{1, 0, 1};
    m.at(1, 0) = TPoly{0, 0, 3};
    m.at(1, 1) = TPoly{2};
    m.at(2, 0) = TPoly{1};
    m.at(2, 1) = TPoly{1, 0, -1};
    m.at(2, 2) = TPoly{5};
    CHECK(inverse_entry_formula(m, 1, 1) == RationalFunction(TPoly(1), TPoly(2)));
    CHECK(inverse_entry_formula(m, 1, 0) ==
          -RationalFunction(TPoly{0, 0, 3}, TPoly{1, 0, 1} * TPoly(2)));
    CHECK_THROWS_AS(inverse_entry_formula(m, 3, 0), IndexOutOfRange);
}

TEST_CASE("inverse entry formula matches forward substitution") {
    SUBCASE("on the theorem's h-matrix") {
        PolyMatrix<QPoly> h = faulhaber_h_matrix(5);
        PolyMatrix<RationalFunction> hr(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) hr.at(i, j) = RationalFunction(h.at(i, j));
        PolyMatrix<RationalFunction> inv = invert_lower_triangular(hr);
        for (std::size_t n = 0; n < 5; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(inverse_entry_formula(h, n, k) == inv.at(n, k));
    }
    SUBCASE("on random lower-triangular matrices") {
        for (int trial = 0; trial < 5; ++trial) {
            const std::size_t dim = 6;
            PolyMatrix<TPoly> m(dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                m.at(i, i) = TPoly{1, 0, static_cast<long>(i) + 1};
                for (std::size_t j = 0; j < i; ++j) m.at(i, j) = random_tpoly(2, 4);
            }
            PolyMatrix<RationalFunction> mr(dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) mr.at(i, j) = RationalFunction(m.at(i, j));
            PolyMatrix<RationalFunction> inv = invert_lower_triangular(mr);
            for (std::size_t n = 0; n < dim; ++n)
                for (std::size_t k = 0; k <= n; ++k)
                    CHECK(inverse_entry_formula(m, n, k) == inv.at(n, k));
        }
    }
}
