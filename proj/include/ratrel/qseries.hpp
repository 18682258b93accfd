#ifndef RATREL_QSERIES_HPP
#define RATREL_QSERIES_HPP

#include <string>
#include <vector>

#include "ratrel/laurent.hpp"

namespace ratrel {

// Product of eta-function factors prod eta(q^d)^e plus a constant. The
// exponent sum d*e must be divisible by 24 for the expansion to have
// integer q-exponents.
struct EtaQuotientSpec {
    std::vector<std::pair<long, long>> factors; // (scale d, exponent e)
    Rational add_constant = Rational(0);

    long exponent_sum() const;
    long leading_exponent() const; // exponent_sum() / 24
};

// prod_{n>=1} (1 - q^(scale*n)) via the pentagonal-number expansion,
// tracked for n_terms coefficients from q^0.
LaurentSeries euler_product_series(long scale, long n_terms);

// Expansion of an eta quotient with n_terms coefficients from its leading
// exponent. Throws NonIntegralEtaExponent when sum(d*e) % 24 != 0.
LaurentSeries eta_quotient_series(const EtaQuotientSpec& spec, long n_terms);

// A verified identity source(q^k) = f(target(q)).
struct RationalRelation {
    RationalFunction f;
    long k = 0; // equals deg num(f) - deg den(f)
    std::string source;
    std::string target;
    long verified_to = 0; // number of series coefficients checked
};

// All rational relations s1(q^k) = f(s2(q)) with numerator degree d and
// k = 1..d. Both series must have leading exponent -1 and carry at least
// 2d + 16 coefficients (InsufficientPrecision otherwise). Every returned
// relation re-verifies against the full available precision.
std::vector<RationalRelation> find_relations(const LaurentSeries& s1, const LaurentSeries& s2,
                                             long d);

} // namespace ratrel

#endif
