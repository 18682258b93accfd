#include "ratrel/bivar.hpp"

#include <sstream>

namespace ratrel {

BivarPoly::BivarPoly(const Rational& c) {
    if (c != 0) xc_.push_back(Polynomial(c));
}

BivarPoly::BivarPoly(std::vector<Polynomial> x_coeffs) : xc_(std::move(x_coeffs)) { normalize(); }

BivarPoly BivarPoly::x() { return BivarPoly({Polynomial::zero(), Polynomial::one()}); }

BivarPoly BivarPoly::y() { return BivarPoly({Polynomial::t()}); }

void BivarPoly::normalize() {
    while (!xc_.empty() && xc_.back().is_zero()) xc_.pop_back();
}

bool BivarPoly::is_constant() const {
    return xc_.empty() || (xc_.size() == 1 && xc_[0].is_constant());
}

std::size_t BivarPoly::degree_x() const {
    if (is_zero()) raise("ZeroPolynomial", "degree of the zero polynomial");
    return xc_.size() - 1;
}

std::size_t BivarPoly::degree_y() const {
    if (is_zero()) raise("ZeroPolynomial", "degree of the zero polynomial");
    std::size_t d = 0;
    for (const auto& p : xc_)
        if (!p.is_zero() && !p.is_constant()) d = std::max(d, p.degree());
    return d;
}

const Polynomial& BivarPoly::coefficient_x(std::size_t i) const {
    static const Polynomial kZero;
    return i < xc_.size() ? xc_[i] : kZero;
}

const Rational& BivarPoly::coefficient(std::size_t i, std::size_t j) const {
    return coefficient_x(i).coefficient(j);
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out(*this);
    for (auto& p : out.xc_) p = -p;
    return out;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    std::vector<Polynomial> v(std::max(a.xc_.size(), b.xc_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient_x(i) + b.coefficient_x(i);
    return BivarPoly(std::move(v));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return BivarPoly();
    std::vector<Polynomial> v(a.xc_.size() + b.xc_.size() - 1);
    for (std::size_t i = 0; i < a.xc_.size(); ++i) {
        if (a.xc_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.xc_.size(); ++j) {
            if (b.xc_[j].is_zero()) continue;
            v[i + j] += a.xc_[i] * b.xc_[j];
        }
    }
    return BivarPoly(std::move(v));
}

BivarPoly BivarPoly::pow(std::size_t e) const {
    BivarPoly acc(Rational(1));
    BivarPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

BivarPoly exact_divide(const BivarPoly& num, const BivarPoly& den) {
    if (den.is_zero()) raise("DivisionByZeroPolynomial", "bivariate division by zero");
    if (num.is_zero()) return BivarPoly();
    // Long division in (Q[Y])[X]; every leading-coefficient division must
    // come out exact, which holds whenever den divides num.
    std::vector<Polynomial> rem(num.xc_);
    const std::size_t db = den.xc_.size() - 1;
    const Polynomial& lead = den.xc_.back();
    if (rem.size() - 1 < db) raise("DivisionByZeroPolynomial", "inexact bivariate division");
    std::vector<Polynomial> quot(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        DivRem dr = poly_divrem(rem[i], lead);
        if (!dr.remainder.is_zero())
            raise("DivisionByZeroPolynomial", "inexact bivariate division");
        quot[i - db] = dr.quotient;
        for (std::size_t j = 0; j <= db; ++j) {
            if (den.xc_[j].is_zero()) continue;
            rem[i - db + j] -= dr.quotient * den.xc_[j];
        }
    }
    for (const auto& r : rem)
        if (!r.is_zero()) raise("DivisionByZeroPolynomial", "inexact bivariate division");
    return BivarPoly(std::move(quot));
}

BivarPoly BivarPoly::content_normalized() const {
    if (is_zero()) return *this;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& p : xc_)
        for (const auto& c : p.coefficients()) {
            Integer d = c.get_den();
            den_lcm = lcm(den_lcm, d);
        }
    for (const auto& p : xc_)
        for (const auto& c : p.coefficients()) {
            Rational scaled = c * Rational(den_lcm);
            num_gcd = gcd(num_gcd, Integer(scaled.get_num()));
        }
    Rational scale = make_rational(den_lcm, num_gcd);
    // Positive leading coefficient under lex order with X > Y.
    const Polynomial& top = xc_.back();
    if (top.leading_coefficient() * scale < 0) scale = -scale;
    BivarPoly out(*this);
    for (auto& p : out.xc_) p *= scale;
    return out;
}

LaurentSeries BivarPoly::evaluate(const LaurentSeries& x, const LaurentSeries& y) const {
    if (is_zero()) raise("PrecisionExhausted", "evaluating the zero bivariate polynomial");
    // Horner in X with the Y-coefficients expanded first.
    LaurentSeries acc = evaluate_polynomial_at_series(xc_.back(), y);
    for (std::size_t i = xc_.size() - 1; i-- > 0;) {
        acc = acc * x;
        if (!xc_[i].is_zero()) acc = acc + evaluate_polynomial_at_series(xc_[i], y);
    }
    return acc;
}

std::string BivarPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = xc_.size(); i-- > 0;) {
        const Polynomial& p = xc_[i];
        if (p.is_zero()) continue;
        for (std::size_t j = (p.is_constant() ? 0 : p.degree()) + 1; j-- > 0;) {
            const Rational& c = p.coefficient(j);
            if (c == 0) continue;
            const bool neg = c < 0;
            Rational abs = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            const bool unit = (abs == 1) && (i > 0 || j > 0);
            if (!unit) os << abs.get_str();
            if (i > 0) {
                if (!unit) os << "*";
                os << "X";
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                if (!unit || i > 0) os << "*";
                os << "Y";
                if (j > 1) os << "^" << j;
            }
        }
    }
    return os.str();
}

namespace {

using TPoly = std::vector<BivarPoly>; // coefficients of t^i

void t_trim(TPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

TPoly t_scale(const TPoly& a, const BivarPoly& s) {
    TPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) out[i] = a[i] * s;
    return out;
}

TPoly t_divide(const TPoly& a, const BivarPoly& s) {
    TPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) out[i] = exact_divide(a[i], s);
    return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced by b.
TPoly t_prem(TPoly a, const TPoly& b) {
    const BivarPoly& lb = b.back();
    long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
    while (!a.empty() && a.size() >= b.size()) {
        const BivarPoly la = a.back();
        const std::size_t shift = a.size() - b.size();
        TPoly scaled = t_scale(a, lb);
        for (std::size_t j = 0; j < b.size(); ++j)
            scaled[shift + j] = scaled[shift + j] - la * b[j];
        scaled.pop_back();
        t_trim(scaled);
        a = std::move(scaled);
        --e;
    }
    if (e > 0) {
        const BivarPoly f = lb.pow(static_cast<std::size_t>(e));
        a = t_scale(a, f);
    }
    return a;
}

} // namespace

BivarPoly resultant_t(std::vector<BivarPoly> a, std::vector<BivarPoly> b) {
    t_trim(a);
    t_trim(b);
    if (a.empty() || b.empty()) return BivarPoly();
    bool negate = false;
    if (a.size() < b.size()) {
        if (((a.size() - 1) * (b.size() - 1)) % 2 == 1) negate = true;
        std::swap(a, b);
    }
    if (b.size() == 1) {
        BivarPoly r = b[0].pow(a.size() - 1);
        return negate ? -r : r;
    }

    // Subresultant remainder sequence; g and h track the exact divisors.
    BivarPoly g(Rational(1)), h(Rational(1));
    int sign = negate ? -1 : 1;
    while (true) {
        const std::size_t da = a.size() - 1;
        const std::size_t db = b.size() - 1;
        const std::size_t delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
        TPoly rem = t_prem(a, b);
        a = std::move(b);
        if (rem.empty()) {
            if (a.size() > 1) return BivarPoly(); // shared factor of positive degree
            raise("ZeroPolynomial", "internal: degenerate subresultant sequence");
        }
        const BivarPoly divisor = g * h.pow(delta);
        b = t_divide(rem, divisor);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_divide(g.pow(delta), h.pow(delta - 1));
        }
        if (b.size() == 1) {
            const std::size_t dap = a.size() - 1; // degree of the previous b
            BivarPoly res;
            if (dap == 0) {
                res = b[0];
            } else if (dap == 1) {
                res = b[0];
            } else {
                res = exact_divide(b[0].pow(dap), h.pow(dap - 1));
            }
            return sign < 0 ? -res : res;
        }
    }
}

} // namespace ratrel
