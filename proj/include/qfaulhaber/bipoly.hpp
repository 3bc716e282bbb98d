#pragma once

#include <vector>

#include "qfaulhaber/tpoly.hpp"

namespace qfaulhaber {

/// Polynomial in a second variable x with TPoly coefficients, stored densely
/// in ascending x-exponent order with no trailing zero coefficient.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(TPoly constant);
    BiPoly(long constant) : BiPoly(TPoly(constant)) {}
    explicit BiPoly(std::vector<TPoly> x_coeffs);

    static BiPoly monomial(TPoly coeff, int x_exponent);

    /// Degree in x; -1 for zero.
    int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^s; zero outside the support.
    const TPoly& coeff_x(int s) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
    friend bool operator==(const BiPoly& lhs, const BiPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
    friend bool operator!=(const BiPoly& lhs, const BiPoly& rhs) { return !(lhs == rhs); }

private:
    std::vector<TPoly> coeffs_;

    void trim();
};

BiPoly pow(const BiPoly& base, int exponent);

enum class BinomialBase {
    OneMinusQX,  // 1 - q*x
    QMinusX,     // q - x
};

/// Exact binomial expansion of (1 - qx)^e or (q - x)^e.
BiPoly binomial_power(BinomialBase base, int exponent);

/// Integer coefficient of q^r x^s (t-exponent 2r); 0 when absent. Throws
/// HalfPowerPresent if the x^s coefficient carries odd t-exponents.
Integer coeff_qx(const BiPoly& p, int r, int s);

}  // namespace qfaulhaber
