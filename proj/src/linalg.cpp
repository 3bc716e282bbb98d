#include "qfaulhaber/matrix.hpp"

namespace qfaulhaber {

namespace {

template <typename Ring>
void require_lower_triangular(const PolyMatrix<Ring>& m) {
    if (!m.is_square()) throw NotTriangular("matrix not square");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) throw NotTriangular("nonzero entry above the diagonal");
}

template <typename Ring>
void require_nonzero_diagonal(const PolyMatrix<Ring>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.at(i, i).is_zero()) throw SingularDiagonal("zero diagonal entry");
}

template <typename Ring>
RationalFunction inverse_entry_impl(const PolyMatrix<Ring>& a, std::size_t n, std::size_t k) {
    require_lower_triangular(a);
    require_nonzero_diagonal(a);
    if (n >= a.rows() || k > n) throw IndexOutOfRange("inverse_entry_formula: need 0 <= k <= n < dim");
    const std::size_t d = n - k;
    PolyMatrix<Ring> sub(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sub.at(i, j) = a.at(k + i + 1, k + j);
    TPoly numerator = det_bareiss(std::move(sub));
    if (d % 2 == 1) numerator = -numerator;
    TPoly denominator(1);
    for (std::size_t i = k; i <= n; ++i) denominator *= a.at(i, i);
    return RationalFunction(std::move(numerator), std::move(denominator));
}

}  // namespace

PolyMatrix<RationalFunction> invert_lower_triangular(const PolyMatrix<RationalFunction>& m) {
    require_lower_triangular(m);
    require_nonzero_diagonal(m);
    const std::size_t n = m.rows();
    PolyMatrix<RationalFunction> inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        inv.at(j, j) = m.at(j, j).reciprocal();
        for (std::size_t i = j + 1; i < n; ++i) {
            RationalFunction acc;
            for (std::size_t l = j; l < i; ++l) acc += m.at(i, l) * inv.at(l, j);
            if (!acc.is_zero()) inv.at(i, j) = -(acc / m.at(i, i));
        }
    }
    return inv;
}

RationalFunction inverse_entry_formula(const PolyMatrix<TPoly>& a, std::size_t n, std::size_t k) {
    return inverse_entry_impl(a, n, k);
}

RationalFunction inverse_entry_formula(const PolyMatrix<QPoly>& a, std::size_t n, std::size_t k) {
    return inverse_entry_impl(a, n, k);
}

}  // namespace qfaulhaber
