#include "qfaulhaber/rational_function.hpp"

#include <ostream>
#include <utility>

namespace qfaulhaber {

RationalFunction::RationalFunction(TPoly numerator, TPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = TPoly(1);
        return;
    }
    TPoly g = gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Integer c = integer_gcd(num_.content(), den_.content());
    if (c > 1) {
        std::vector<Integer> cn(num_.coeffs()), cd(den_.coeffs());
        for (Integer& x : cn) x /= c;
        for (Integer& x : cd) x /= c;
        num_ = TPoly(std::move(cn));
        den_ = TPoly(std::move(cd));
    }
    if (den_.coeff(den_.low_degree()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RationalFunction::is_polynomial() const { return den_ == TPoly(1); }

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    if (num_.is_zero()) den_ = TPoly(1);
    else reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    if (num_.is_zero()) den_ = TPoly(1);
    else reduce();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    if (num_.is_zero()) den_ = TPoly(1);
    else reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero rational function");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    if (num_.is_zero()) den_ = TPoly(1);
    else reduce();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    if (r.is_polynomial()) return os << r.num_;
    return os << "(" << r.num_ << ") / (" << r.den_ << ")";
}

}  // namespace qfaulhaber
