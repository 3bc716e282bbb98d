#pragma once

#include <iosfwd>

#include "qfaulhaber/tpoly.hpp"

namespace qfaulhaber {

/// Element of the fraction field Q(t), stored as a canonical quotient of two
/// TPoly values: numerator and denominator share no common factor in Z[t]
/// and the denominator's lowest nonzero coefficient is positive. Two equal
/// field values therefore have identical representations.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long constant) : num_(constant), den_(1) {}
    RationalFunction(Integer constant) : num_(std::move(constant)), den_(1) {}
    RationalFunction(TPoly numerator) : num_(std::move(numerator)), den_(1) {}
    RationalFunction(const QPoly& numerator) : num_(numerator.poly()), den_(1) {}
    /// Throws DivisionByZero when the denominator vanishes.
    RationalFunction(TPoly numerator, TPoly denominator);

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True iff the canonical denominator is 1.
    bool is_polynomial() const;

    RationalFunction reciprocal() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
    friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
    friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
    friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }
    friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const RationalFunction& lhs, const RationalFunction& rhs) { return !(lhs == rhs); }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

private:
    TPoly num_;
    TPoly den_;

    void reduce();
};

}  // namespace qfaulhaber
