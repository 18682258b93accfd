#ifndef RATREL_RATIONAL_HPP
#define RATREL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ratrel/error.hpp"

namespace ratrel {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through the
// helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) raise("ZeroDenominator", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) raise("ZeroDenominator", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q"; arbitrary precision.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational r(text);
        if (r.get_den() == 0) raise("ZeroDenominator", "zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        raise("ParseError", "not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Total order used for canonical sorting of coefficient sequences.
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

} // namespace ratrel

#endif
