#include "ratrel/laurent.hpp"

#include <algorithm>

namespace ratrel {

LaurentSeries::LaurentSeries(long lead, std::vector<Rational> coeffs)
    : lead_(lead), coeffs_(std::move(coeffs)) {
    normalize();
}

void LaurentSeries::normalize() {
    std::size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    if (skip > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
        lead_ += static_cast<long>(skip);
    }
}

LaurentSeries LaurentSeries::zero_to(long precision) {
    LaurentSeries s;
    s.lead_ = precision;
    return s;
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long e, long precision) {
    if (e >= precision || c == 0) return zero_to(precision);
    std::vector<Rational> v(static_cast<std::size_t>(precision - e), Rational(0));
    v[0] = c;
    return LaurentSeries(e, std::move(v));
}

long LaurentSeries::leading_exponent() const {
    if (is_zero()) raise("PrecisionExhausted", "leading exponent of a tracked-zero series");
    return lead_;
}

const Rational& LaurentSeries::coefficient(long e) const {
    static const Rational kZero(0);
    if (e < lead_) return kZero;
    if (e >= precision()) raise("PrecisionExhausted", "coefficient beyond tracked precision");
    return coeffs_[static_cast<std::size_t>(e - lead_)];
}

LaurentSeries LaurentSeries::truncated(long new_precision) const {
    if (new_precision >= precision()) return *this;
    if (new_precision <= lead_) return zero_to(new_precision);
    LaurentSeries out(*this);
    out.coeffs_.resize(static_cast<std::size_t>(new_precision - lead_));
    out.normalize();
    return out;
}

LaurentSeries LaurentSeries::shifted(long delta) const {
    LaurentSeries out(*this);
    out.lead_ += delta;
    return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const long prec = std::min(a.precision(), b.precision());
    const long lead = std::min(a.lead_, b.lead_);
    if (prec <= lead) return LaurentSeries::zero_to(prec);
    std::vector<Rational> v(static_cast<std::size_t>(prec - lead));
    for (long e = lead; e < prec; ++e)
        v[static_cast<std::size_t>(e - lead)] = a.coefficient(e) + b.coefficient(e);
    return LaurentSeries(lead, std::move(v));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // Tracked length of a product is the shorter of the two relative
    // lengths; absolute precision follows from the leading exponents.
    const long lead = a.lead_ + b.lead_;
    const std::size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
    if (len == 0) return LaurentSeries::zero_to(lead);
    std::vector<Rational> v(len, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
        if (a.coeffs_[i] == 0) continue;
        const std::size_t jmax = std::min(b.coeffs_.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.coeffs_[j] == 0) continue;
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentSeries(lead, std::move(v));
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    if (c == 0) return zero_to(precision());
    LaurentSeries out(*this);
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

LaurentSeries LaurentSeries::plus_constant(const Rational& c) const {
    if (c == 0) return *this;
    const long prec = precision();
    if (prec <= 0) return *this; // the q^0 term lies beyond the tracked range
    LaurentSeries out(*this);
    if (lead_ > 0) {
        out.coeffs_.insert(out.coeffs_.begin(), static_cast<std::size_t>(lead_), Rational(0));
        out.lead_ = 0;
    }
    out.coeffs_[static_cast<std::size_t>(0 - out.lead_)] += c;
    out.normalize();
    return out;
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero())
        raise("PrecisionExhausted", "inverting a series that vanishes to its tracked precision");
    const std::size_t len = coeffs_.size();
    std::vector<Rational> b(len, Rational(0));
    const Rational inv0 = Rational(1) / coeffs_[0];
    b[0] = inv0;
    for (std::size_t m = 1; m < len; ++m) {
        Rational acc(0);
        for (std::size_t k = 1; k <= m; ++k) {
            if (coeffs_[k] == 0 || b[m - k] == 0) continue;
            acc += coeffs_[k] * b[m - k];
        }
        b[m] = -acc * inv0;
    }
    return LaurentSeries(-lead_, std::move(b));
}

LaurentSeries LaurentSeries::pow(std::size_t e) const {
    if (e == 0) raise("PrecisionExhausted", "series pow(0) has no finite-precision representation");
    LaurentSeries acc = *this;
    for (std::size_t i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

bool agree_on_overlap(const LaurentSeries& a, const LaurentSeries& b) {
    const long prec = std::min(a.precision(), b.precision());
    const long lead = std::min(a.lead_, b.lead_);
    for (long e = lead; e < prec; ++e)
        if (a.coefficient(e) != b.coefficient(e)) return false;
    return true;
}

LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

LaurentSeries substitute_q_power(const LaurentSeries& s, long k) {
    if (k < 1) raise("PrecisionExhausted", "q-power substitution needs k >= 1");
    if (k == 1) return s;
    if (s.is_zero()) return LaurentSeries::zero_to(k * s.precision());
    const long lead = k * s.leading_exponent();
    const long prec = k * s.precision();
    // Exponents strictly between multiples of k are exactly zero, so the
    // whole range below k*precision is known.
    std::vector<Rational> v(static_cast<std::size_t>(prec - lead), Rational(0));
    for (std::size_t i = 0; i < s.length(); ++i)
        v[static_cast<std::size_t>(k) * i] = s.coefficient(s.leading_exponent() + static_cast<long>(i));
    return LaurentSeries(lead, std::move(v));
}

LaurentSeries evaluate_polynomial_at_series(const Polynomial& p, const LaurentSeries& s) {
    if (p.is_zero()) raise("PrecisionExhausted", "evaluating the zero polynomial at a series");
    const std::size_t n = p.degree();
    if (n == 0) return LaurentSeries::monomial(p.coefficient(0), 0, s.precision());
    // Horner with exact scalar coefficients: constants do not lower the
    // precision horizon.
    LaurentSeries acc = s.scaled(p.coefficient(n));
    acc = acc.plus_constant(p.coefficient(n - 1));
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * s;
        acc = acc.plus_constant(p.coefficient(i));
    }
    return acc;
}

LaurentSeries compose_rational_with_series(const RationalFunction& f, const LaurentSeries& s) {
    if (f.is_constant())
        raise("ConstantResult", "composing a constant function with a series");
    LaurentSeries num = evaluate_polynomial_at_series(f.num(), s);
    if (f.den().is_one()) return num;
    LaurentSeries den = evaluate_polynomial_at_series(f.den(), s);
    return divide(num, den);
}

} // namespace ratrel
