#include "ratrel/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ratrel {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::initializer_list<Rational> low_to_high)
    : coeffs_(low_to_high) {
    normalize();
}

Polynomial::Polynomial(std::vector<Rational> low_to_high)
    : coeffs_(std::move(low_to_high)) {
    normalize();
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = coeff;
    }
    return p;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
    if (is_zero()) raise("ZeroPolynomial", "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

const Rational& Polynomial::leading_coefficient() const {
    if (is_zero()) raise("ZeroPolynomial", "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Rational& Polynomial::coefficient(std::size_t i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) raise("ZeroPolynomial", "monic form of the zero polynomial");
    if (is_monic()) return *this;
    Polynomial out(*this);
    const Rational inv = Rational(1) / coeffs_.back();
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Polynomial Polynomial::pow(std::size_t e) const {
    Polynomial acc = Polynomial::one();
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
    std::vector<Rational> out(coeffs_);
    Rational p(1);
    for (std::size_t i = 1; i < out.size(); ++i) {
        p *= s;
        out[i] *= p;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shift_argument(const Rational& a) const {
    // Horner: p(t+a) = (((c_n)(t+a) + c_{n-1})(t+a) + ...)
    Polynomial shift{a, Rational(1)};
    Polynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= shift;
        acc += Polynomial(coeffs_[i]);
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational abs = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit_coeff = (abs == 1) && i > 0;
        if (!unit_coeff) os << abs.get_str();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DivRem poly_divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) raise("DivisionByZeroPolynomial", "division by the zero polynomial");
    if (a.is_zero() || a.degree() < b.degree()) return {Polynomial(), a};

    std::vector<Rational> rem(a.coefficients());
    const long db = static_cast<long>(b.degree());
    const Rational& lb = b.leading_coefficient();
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    for (long i = static_cast<long>(a.degree()); i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / lb;
        quot[i - db] = q;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coefficient(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool poly_divides(const Polynomial& divisor, const Polynomial& value) {
    if (divisor.is_zero()) return value.is_zero();
    return poly_divrem(value, divisor).remainder.is_zero();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) raise("BothZero", "gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = poly_divrem(x, y).remainder;
        // Keeping remainders monic controls coefficient growth in Q[t].
        x = std::move(y);
        y = r.is_zero() ? Polynomial() : r.monic();
    }
    return x.monic();
}

int poly_compare(const Polynomial& a, const Polynomial& b) {
    const bool az = a.is_zero(), bz = b.is_zero();
    if (az || bz) return az && bz ? 0 : (az ? -1 : 1);
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.degree() + 1; i-- > 0;) {
        int c = compare(a.coefficient(i), b.coefficient(i));
        if (c != 0) return c;
        if (i == 0) break;
    }
    return 0;
}

IntegerPolynomial to_integer_primitive(const Polynomial& a) {
    if (a.is_zero()) raise("ZeroPolynomial", "integer primitive part of the zero polynomial");
    Integer den_lcm(1);
    for (const auto& c : a.coefficients()) {
        Integer d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<Integer> ints(a.coefficients().size());
    Integer content(0);
    for (std::size_t i = 0; i < ints.size(); ++i) {
        Rational scaled = a.coefficient(i) * Rational(den_lcm);
        ints[i] = scaled.get_num(); // exact: denominator cleared
        content = gcd(content, ints[i]);
    }
    bool flip = ints.back() < 0;
    if (flip) content = -content;
    for (auto& v : ints) v /= content;
    return {make_rational(content, den_lcm), std::move(ints)};
}

} // namespace ratrel
