#ifndef RATREL_POLYNOMIAL_HPP
#define RATREL_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ratrel/rational.hpp"

namespace ratrel {

// Dense univariate polynomial over Q in the variable t.
// coefficients_[i] holds the coefficient of t^i; the vector carries no
// trailing zeros, and the zero polynomial is the empty vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    Polynomial(std::initializer_list<Rational> low_to_high);
    explicit Polynomial(std::vector<Rational> low_to_high);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rational(1)); }
    static Polynomial t() { return monomial(1, Rational(1)); }
    static Polynomial monomial(std::size_t degree, const Rational& coeff);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    // Degree of a nonzero polynomial. The zero polynomial has no degree;
    // callers branch on is_zero() first.
    std::size_t degree() const;

    const Rational& leading_coefficient() const;
    const Rational& coefficient(std::size_t i) const; // 0 beyond degree
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_monic() const { return !is_zero() && leading_coefficient() == 1; }
    Polynomial monic() const;

    Rational evaluate(const Rational& x) const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial pow(std::size_t e) const;

    // Substitutes t -> s*t (used by the monic reduction in factoring).
    Polynomial scale_argument(const Rational& s) const;
    // Substitutes t -> t + a.
    Polynomial shift_argument(const Rational& a) const;

    std::string to_string() const; // canonical text, re-parseable by the expression parser

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

// Exact Euclidean division: a = b*q + r with deg r < deg b.
// Throws DivisionByZeroPolynomial when b is zero.
DivRem poly_divrem(const Polynomial& a, const Polynomial& b);

bool poly_divides(const Polynomial& divisor, const Polynomial& value);

// Monic gcd. Throws BothZero when both arguments vanish.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Total order for canonical output: degree first, then coefficients from
// the leading end down.
int poly_compare(const Polynomial& a, const Polynomial& b);

// Splits a nonzero polynomial into content * primitive integer polynomial
// with positive leading coefficient.
struct IntegerPolynomial {
    Rational content;
    std::vector<Integer> coeffs; // primitive, positive leading coefficient
};
IntegerPolynomial to_integer_primitive(const Polynomial& a);

} // namespace ratrel

#endif
