#include "qfaulhaber/tpoly.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace qfaulhaber {

namespace {
const Integer kZero = 0;
}

TPoly::TPoly(Integer constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

TPoly::TPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly::TPoly(std::initializer_list<long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long c : ascending_coeffs) coeffs_.emplace_back(c);
    trim();
}

TPoly TPoly::monomial(Integer coeff, int exponent) {
    if (exponent < 0) throw IndexOutOfRange("monomial: negative exponent");
    if (coeff == 0) return TPoly{};
    std::vector<Integer> cs(static_cast<std::size_t>(exponent) + 1, kZero);
    cs.back() = std::move(coeff);
    return TPoly(std::move(cs));
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int TPoly::low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

const Integer& TPoly::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(e)];
}

bool TPoly::is_q_pure() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2)
        if (coeffs_[i] != 0) return false;
    return true;
}

Integer TPoly::eval(const Integer& value) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

TPoly TPoly::shifted(int k) const {
    if (k < 0) throw IndexOutOfRange("shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Integer> cs(static_cast<std::size_t>(k), kZero);
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return TPoly(std::move(cs));
}

Integer TPoly::content() const {
    Integer g = 0;
    for (const Integer& c : coeffs_) {
        if (c == 0) continue;
        g = integer_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

TPoly TPoly::primitive_part() const {
    if (is_zero()) return *this;
    Integer c = content();
    if (c == 1) return *this;
    std::vector<Integer> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i] / c;
    return TPoly(std::move(cs));
}

TPoly TPoly::operator-() const {
    TPoly r(*this);
    for (Integer& c : r.coeffs_) c = -c;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& lhs, const TPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return TPoly{};
    std::vector<Integer> cs(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) cs[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return TPoly(std::move(cs));
}

TPoly& TPoly::operator*=(const TPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

TPoly operator*(const Integer& scalar, const TPoly& p) {
    if (scalar == 0) return TPoly{};
    std::vector<Integer> cs(p.coeffs());
    for (Integer& c : cs) c *= scalar;
    return TPoly(std::move(cs));
}

TPoly pow(const TPoly& base, int exponent) {
    if (exponent < 0) throw NegativeArgument("pow: negative exponent");
    TPoly result(1);
    TPoly b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

TPoly exact_div(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div: zero divisor");
    if (a.is_zero()) return TPoly{};
    int da = a.degree(), db = b.degree();
    if (da < db) throw NotDivisible("exact_div: degree of dividend below divisor");
    std::vector<Integer> rem(a.coeffs());
    std::vector<Integer> quot(static_cast<std::size_t>(da - db) + 1, Integer(0));
    const Integer& lead = b.coeff(db);
    for (int i = da - db; i >= 0; --i) {
        Integer& top = rem[static_cast<std::size_t>(db + i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw NotDivisible("exact_div: leading coefficient does not divide");
        Integer qi = top / lead;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= qi * b.coeff(j);
        quot[static_cast<std::size_t>(i)] = std::move(qi);
    }
    for (const Integer& c : rem)
        if (c != 0) throw NotDivisible("exact_div: nonzero remainder");
    return TPoly(std::move(quot));
}

TPoly sign_normalized(TPoly p) {
    int low = p.low_degree();
    if (low >= 0 && p.coeff(low) < 0) return -p;
    return p;
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b >= 0): scales the remainder by
// powers of lc(b) so every step stays in Z[t].
TPoly pseudo_rem(TPoly a, const TPoly& b) {
    const int db = b.degree();
    const Integer& lead = b.coeff(db);
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Integer top = a.coeff(a.degree());
        a = lead * a - top * b.shifted(shift);
    }
    return a;
}

}  // namespace

TPoly gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd: both arguments zero");
    if (a.is_zero()) return sign_normalized(b.primitive_part());
    if (b.is_zero()) return sign_normalized(a.primitive_part());
    TPoly u = a.primitive_part();
    TPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        TPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return sign_normalized(std::move(u));
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int e = p.degree(); e >= 0; --e) {
        const Integer& c = p.coeff(e);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Integer mag = abs(c);
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os;
}

QPoly::QPoly(TPoly p) : p_(std::move(p)) {
    if (!p_.is_q_pure()) throw HalfPowerPresent("QPoly: odd t-exponent present");
}

QPoly QPoly::from_q_coeffs(const std::vector<Integer>& ascending_q_coeffs) {
    if (ascending_q_coeffs.empty()) return QPoly{};
    std::vector<Integer> cs(2 * ascending_q_coeffs.size() - 1, Integer(0));
    for (std::size_t i = 0; i < ascending_q_coeffs.size(); ++i) cs[2 * i] = ascending_q_coeffs[i];
    return QPoly(TPoly(std::move(cs)), unchecked{});
}

std::vector<Integer> QPoly::q_coeffs() const {
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(q_degree() + 1));
    for (int i = 0; i <= q_degree(); ++i) out.push_back(coeff_q(i));
    return out;
}

}  // namespace qfaulhaber
