#include "qfaulhaber/bipoly.hpp"

#include <utility>

#include "qfaulhaber/qcombinatorics.hpp"

namespace qfaulhaber {

namespace {
const TPoly kZeroPoly{};
}

BiPoly::BiPoly(TPoly constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

BiPoly::BiPoly(std::vector<TPoly> x_coeffs) : coeffs_(std::move(x_coeffs)) { trim(); }

BiPoly BiPoly::monomial(TPoly coeff, int x_exponent) {
    if (x_exponent < 0) throw IndexOutOfRange("BiPoly::monomial: negative exponent");
    if (coeff.is_zero()) return BiPoly{};
    std::vector<TPoly> cs(static_cast<std::size_t>(x_exponent) + 1);
    cs.back() = std::move(coeff);
    return BiPoly(std::move(cs));
}

void BiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const TPoly& BiPoly::coeff_x(int s) const {
    if (s < 0 || s >= static_cast<int>(coeffs_.size())) return kZeroPoly;
    return coeffs_[static_cast<std::size_t>(s)];
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (TPoly& c : r.coeffs_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return BiPoly{};
    std::vector<TPoly> cs(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) cs[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return BiPoly(std::move(cs));
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

BiPoly pow(const BiPoly& base, int exponent) {
    if (exponent < 0) throw NegativeArgument("pow: negative exponent");
    BiPoly result(TPoly(1));
    BiPoly b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

BiPoly binomial_power(BinomialBase base, int exponent) {
    if (exponent < 0) throw NegativeArgument("binomial_power: negative exponent");
    std::vector<TPoly> cs(static_cast<std::size_t>(exponent) + 1);
    for (int j = 0; j <= exponent; ++j) {
        Integer c = binomial(exponent, j);
        if (j % 2 == 1) c = -c;
        int t_exp = (base == BinomialBase::OneMinusQX) ? 2 * j : 2 * (exponent - j);
        cs[static_cast<std::size_t>(j)] = TPoly::monomial(std::move(c), t_exp);
    }
    return BiPoly(std::move(cs));
}

Integer coeff_qx(const BiPoly& p, int r, int s) {
    if (r < 0 || s < 0) return 0;
    const TPoly& c = p.coeff_x(s);
    if (!c.is_q_pure()) throw HalfPowerPresent("coeff_qx: x-coefficient not a polynomial in q");
    return c.coeff(2 * r);
}

}  // namespace qfaulhaber
