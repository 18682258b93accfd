#ifndef RATREL_LAURENT_HPP
#define RATREL_LAURENT_HPP

#include <vector>

#include "ratrel/ratfunc.hpp"
#include "ratrel/rational.hpp"

namespace ratrel {

// Truncated Laurent series in q with exact rational coefficients.
// Coefficients are tracked for exponents lead .. precision-1; everything
// below lead is known to be zero, everything from precision on is unknown.
// A series that vanishes on its whole tracked range is stored with an
// empty coefficient vector and lead == precision.
class LaurentSeries {
public:
    LaurentSeries() : lead_(0) {}
    LaurentSeries(long lead, std::vector<Rational> coeffs);

    static LaurentSeries zero_to(long precision);
    // c * q^e, tracked through precision (exclusive).
    static LaurentSeries monomial(const Rational& c, long e, long precision);

    bool is_zero() const { return coeffs_.empty(); }
    long leading_exponent() const;
    long precision() const { return lead_ + static_cast<long>(coeffs_.size()); }
    std::size_t length() const { return coeffs_.size(); }

    // Exact coefficient of q^e; zero below the leading exponent, error at
    // or beyond the precision horizon.
    const Rational& coefficient(long e) const;

    LaurentSeries truncated(long new_precision) const;
    LaurentSeries shifted(long delta) const; // multiply by q^delta

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;

    LaurentSeries scaled(const Rational& c) const;     // exact scalar multiple
    LaurentSeries plus_constant(const Rational& c) const; // exact shift of the q^0 term
    LaurentSeries inverse() const;                     // PrecisionExhausted on tracked zero
    LaurentSeries pow(std::size_t e) const;

    bool operator==(const LaurentSeries& o) const {
        return lead_ == o.lead_ && coeffs_ == o.coeffs_;
    }

    // True when the two series agree on every exponent both track.
    friend bool agree_on_overlap(const LaurentSeries& a, const LaurentSeries& b);

private:
    void normalize();
    long lead_;
    std::vector<Rational> coeffs_;
};

LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b);

// q -> q^k; exponents and precision scale by k.
LaurentSeries substitute_q_power(const LaurentSeries& s, long k);

// f(s) as a Laurent series: numerator and denominator evaluated at s,
// then divided. PrecisionExhausted when no correct coefficient can be
// produced.
LaurentSeries compose_rational_with_series(const RationalFunction& f, const LaurentSeries& s);

// Evaluates a polynomial at a series (exact constants do not reduce
// precision).
LaurentSeries evaluate_polynomial_at_series(const Polynomial& p, const LaurentSeries& s);

} // namespace ratrel

#endif
