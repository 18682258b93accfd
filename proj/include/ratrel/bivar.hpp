#ifndef RATREL_BIVAR_HPP
#define RATREL_BIVAR_HPP

#include <string>
#include <vector>

#include "ratrel/laurent.hpp"
#include "ratrel/polynomial.hpp"

namespace ratrel {

// Polynomial in Q[X, Y], stored as coefficients of X^i that are univariate
// polynomials in Y. Trailing zero X-coefficients are trimmed.
class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(const Rational& c);
    explicit BivarPoly(std::vector<Polynomial> x_coeffs);

    static BivarPoly x();
    static BivarPoly y();

    bool is_zero() const { return xc_.empty(); }
    bool is_constant() const;
    std::size_t degree_x() const; // requires nonzero
    std::size_t degree_y() const; // requires nonzero
    const Polynomial& coefficient_x(std::size_t i) const; // zero polynomial beyond degree
    const Rational& coefficient(std::size_t i, std::size_t j) const;

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    bool operator==(const BivarPoly& o) const { return xc_ == o.xc_; }

    BivarPoly pow(std::size_t e) const;

    // Exact quotient; raises if the division leaves a remainder.
    friend BivarPoly exact_divide(const BivarPoly& num, const BivarPoly& den);

    // Integer-primitive form with positive lex-leading (X over Y) term.
    BivarPoly content_normalized() const;

    LaurentSeries evaluate(const LaurentSeries& x, const LaurentSeries& y) const;
    std::string to_string() const;

private:
    void normalize();
    std::vector<Polynomial> xc_;
};

// Resultant with respect to t of two polynomials with BivarPoly
// coefficients (index = power of t), by the fraction-free subresultant
// remainder sequence.
BivarPoly resultant_t(std::vector<BivarPoly> a, std::vector<BivarPoly> b);

} // namespace ratrel

#endif
