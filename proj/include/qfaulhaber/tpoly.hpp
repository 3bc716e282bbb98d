#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/numbers.hpp"

namespace qfaulhaber {

/// Univariate polynomial over Integer in the variable t, with the convention
/// q = t^2 so that half-integer powers of q are ordinary monomials in t.
///
/// Coefficients are stored densely in ascending exponent order with no
/// trailing zeros; the zero polynomial is the empty sequence and its degree
/// is -1. Values are immutable in spirit: every operation returns a fresh
/// canonical polynomial.
class TPoly {
public:
    TPoly() = default;
    TPoly(long constant) : TPoly(Integer(constant)) {}
    TPoly(Integer constant);
    explicit TPoly(std::vector<Integer> coeffs);
    TPoly(std::initializer_list<long> ascending_coeffs);

    static TPoly monomial(Integer coeff, int exponent);

    /// Degree in t; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient; -1 for zero.
    int low_degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^e; zero outside the stored support.
    const Integer& coeff(int e) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// True iff every nonzero coefficient sits at an even t-exponent.
    bool is_q_pure() const;

    Integer eval(const Integer& value) const;

    /// Multiplication by t^k (k >= 0).
    TPoly shifted(int k) const;

    /// Gcd of the coefficient magnitudes; 0 for the zero polynomial.
    Integer content() const;
    /// The polynomial divided by its content (zero stays zero).
    TPoly primitive_part() const;

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& rhs);
    TPoly& operator-=(const TPoly& rhs);
    TPoly& operator*=(const TPoly& rhs);

    friend TPoly operator+(TPoly lhs, const TPoly& rhs) { return lhs += rhs; }
    friend TPoly operator-(TPoly lhs, const TPoly& rhs) { return lhs -= rhs; }
    friend TPoly operator*(const TPoly& lhs, const TPoly& rhs);
    friend bool operator==(const TPoly& lhs, const TPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
    friend bool operator!=(const TPoly& lhs, const TPoly& rhs) { return !(lhs == rhs); }

    friend std::ostream& operator<<(std::ostream& os, const TPoly& p);

private:
    std::vector<Integer> coeffs_;

    void trim();
};

TPoly operator*(const Integer& scalar, const TPoly& p);

TPoly pow(const TPoly& base, int exponent);

/// Exact quotient a / b over Z[t]. Throws NotDivisible when no exact quotient
/// exists and DivisionByZero when b is zero.
TPoly exact_div(const TPoly& a, const TPoly& b);

/// Primitive gcd computed by a primitive pseudo-remainder sequence over Z,
/// sign-normalized so the lowest nonzero coefficient is positive. Divides
/// both inputs exactly. Throws BothZero when both arguments vanish.
TPoly gcd(const TPoly& a, const TPoly& b);

/// Negates p if its lowest nonzero coefficient is negative.
TPoly sign_normalized(TPoly p);

/// Invariant-checked view of a TPoly whose support uses only even
/// t-exponents, i.e. a genuine polynomial in q. Arithmetic between QPoly
/// values stays inside the even-exponent subring, so results are wrapped
/// without re-checking.
class QPoly {
public:
    QPoly() = default;
    QPoly(long constant) : p_(constant) {}
    QPoly(Integer constant) : p_(std::move(constant)) {}
    /// Throws HalfPowerPresent unless p is a polynomial in q.
    explicit QPoly(TPoly p);

    /// Builds q^0, q^1, ... coefficients into the t-representation.
    static QPoly from_q_coeffs(const std::vector<Integer>& ascending_q_coeffs);

    const TPoly& poly() const { return p_; }
    operator const TPoly&() const { return p_; }

    bool is_zero() const { return p_.is_zero(); }
    /// Degree in q; -1 for zero.
    int q_degree() const { return p_.degree() < 0 ? -1 : p_.degree() / 2; }
    const Integer& coeff_q(int i) const { return p_.coeff(2 * i); }
    /// Dense ascending coefficients in q (empty for zero).
    std::vector<Integer> q_coeffs() const;

    QPoly operator-() const { return QPoly(-p_, unchecked{}); }
    QPoly& operator+=(const QPoly& rhs) { p_ += rhs.p_; return *this; }
    QPoly& operator-=(const QPoly& rhs) { p_ -= rhs.p_; return *this; }
    QPoly& operator*=(const QPoly& rhs) { p_ *= rhs.p_; return *this; }

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(QPoly lhs, const QPoly& rhs) { return lhs *= rhs; }
    friend bool operator==(const QPoly& lhs, const QPoly& rhs) { return lhs.p_ == rhs.p_; }
    friend bool operator!=(const QPoly& lhs, const QPoly& rhs) { return !(lhs == rhs); }

    friend QPoly exact_div(const QPoly& a, const QPoly& b) {
        return QPoly(exact_div(a.p_, b.p_), unchecked{});
    }

private:
    struct unchecked {};
    QPoly(TPoly p, unchecked) : p_(std::move(p)) {}

    TPoly p_;
};

}  // namespace qfaulhaber
