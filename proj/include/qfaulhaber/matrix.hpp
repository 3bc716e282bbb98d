#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qfaulhaber/rational_function.hpp"
#include "qfaulhaber/tpoly.hpp"

namespace qfaulhaber {

/// Dense rectangular matrix over one ring of entries (TPoly, QPoly, or
/// RationalFunction), row-major.
template <typename Ring>
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Ring(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Ring& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw IndexOutOfRange("PolyMatrix::at");
        return entries_[i * cols_ + j];
    }
    const Ring& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw IndexOutOfRange("PolyMatrix::at");
        return entries_[i * cols_ + j];
    }

    PolyMatrix transposed() const {
        PolyMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
        if (lhs.cols_ != rhs.rows_) throw IndexOutOfRange("PolyMatrix product: shape mismatch");
        PolyMatrix out(lhs.rows_, rhs.cols_);
        for (std::size_t i = 0; i < lhs.rows_; ++i)
            for (std::size_t k = 0; k < lhs.cols_; ++k) {
                const Ring& l = lhs.at(i, k);
                if (l.is_zero()) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += l * rhs.at(k, j);
            }
        return out;
    }

    friend bool operator==(const PolyMatrix& lhs, const PolyMatrix& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
    }
    friend bool operator!=(const PolyMatrix& lhs, const PolyMatrix& rhs) { return !(lhs == rhs); }

private:
    std::size_t rows_, cols_;
    std::vector<Ring> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination; every internal
/// division is exact by construction, and a non-exact one is surfaced as
/// InternalDivisionFailed. The empty 0x0 determinant is 1.
template <typename Ring>
Ring det_bareiss(PolyMatrix<Ring> m) {
    if (!m.is_square()) throw IndexOutOfRange("det_bareiss: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Ring(1);
    int sign = 1;
    Ring prev(1);
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (m.at(c, c).is_zero()) {
            std::size_t p = c + 1;
            while (p < n && m.at(p, c).is_zero()) ++p;
            if (p == n) return Ring{};
            m.swap_rows(c, p);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j) {
                Ring num = m.at(i, j) * m.at(c, c) - m.at(i, c) * m.at(c, j);
                try {
                    m.at(i, j) = exact_div(num, prev);
                } catch (const NotDivisible&) {
                    throw InternalDivisionFailed("det_bareiss: non-exact interior division");
                }
            }
        prev = m.at(c, c);
    }
    Ring d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

/// Determinant by Laplace expansion along the first row; independent oracle
/// for det_bareiss. Throws TooLarge above dimension 8.
template <typename Ring>
Ring det_cofactor(const PolyMatrix<Ring>& m) {
    if (!m.is_square()) throw IndexOutOfRange("det_cofactor: matrix not square");
    const std::size_t n = m.rows();
    if (n > 8) throw TooLarge("det_cofactor: dimension above 8");
    if (n == 0) return Ring(1);
    if (n == 1) return m.at(0, 0);
    Ring acc{};
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix<Ring> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, jj++) = m.at(i, c);
            }
        }
        Ring term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

/// Inverse of a lower-triangular matrix over Q(t) by forward substitution.
/// Throws NotTriangular for non-square or not-lower-triangular input and
/// SingularDiagonal when a diagonal entry vanishes.
PolyMatrix<RationalFunction> invert_lower_triangular(const PolyMatrix<RationalFunction>& m);

/// Entry (n, k) of the inverse of a lower-triangular matrix A with nonzero
/// diagonal, evaluated directly as
///   (-1)^{n-k} det(A_{k+i+1, k+j})_{i,j in 0..n-k-1} / (A_{k,k} ... A_{n,n}).
RationalFunction inverse_entry_formula(const PolyMatrix<TPoly>& a, std::size_t n, std::size_t k);
RationalFunction inverse_entry_formula(const PolyMatrix<QPoly>& a, std::size_t n, std::size_t k);

}  // namespace qfaulhaber
