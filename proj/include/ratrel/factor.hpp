#ifndef RATREL_FACTOR_HPP
#define RATREL_FACTOR_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ratrel/polynomial.hpp"

namespace ratrel {

// unit * prod(factors[i].first ^ factors[i].second) reproduces the input
// exactly. Factors are monic, irreducible over Q, pairwise distinct and
// sorted by poly_compare.
struct Factorization {
    Rational unit;
    std::vector<std::pair<Polynomial, int>> factors;

    Polynomial expand() const;
};

// Complete factorization into monic irreducibles over Q.
// Throws ZeroPolynomial on zero input.
Factorization poly_factor(const Polynomial& a);

// Predicates applied to each candidate divisor before it is emitted.
struct DivisorFilter {
    std::function<bool(std::size_t)> degree_ok; // may be empty
    bool require_t_factor = false;              // keep only divisors divisible by t

    bool accepts(const Polynomial& d) const;
};

// All monic divisors prod(factor^k), 0 <= k <= multiplicity, passing the
// filter, in canonical (poly_compare) order.
std::vector<Polynomial> monic_divisors(const Factorization& fac, const DivisorFilter& filter = {});

} // namespace ratrel

#endif
