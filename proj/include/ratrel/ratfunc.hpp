#ifndef RATREL_RATFUNC_HPP
#define RATREL_RATFUNC_HPP

#include <optional>
#include <string>

#include "ratrel/polynomial.hpp"

namespace ratrel {

// A point of the projective line over Q; evaluation values of rational
// functions live here.
struct P1Value {
    bool infinite = false;
    Rational value; // meaningful when finite

    static P1Value infinity() { return {true, Rational(0)}; }
    static P1Value finite(Rational v) { return {false, std::move(v)}; }

    bool operator==(const P1Value& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator!=(const P1Value& o) const { return !(*this == o); }
};

// Reduced fraction num/den with monic denominator; the unique stored
// representative of an element of Q(t). Constants are representable as
// fraction-field elements; the composition semigroup operations reject
// them where the contracts require nonconstant input.
class RationalFunction {
public:
    RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction identity() { return RationalFunction(Polynomial::t(), Polynomial::one()); }
    static RationalFunction constant(const Rational& c) {
        return RationalFunction(Polynomial(c), Polynomial::one());
    }
    static RationalFunction from_polynomial(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial::one());
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_zero() const { return num_.is_zero(); }
    // max(deg num, deg den); 0 for constants.
    std::size_t degree() const;
    bool is_unit() const { return degree() == 1; }

    P1Value evaluate(const Rational& x) const;
    P1Value value_at_infinity() const;

    // Field arithmetic (used by the parser and by unit conjugation).
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // f(0) = 0, f(inf) = inf, deg num > deg den. Monicity of the numerator
    // is tracked separately since storage keeps the denominator monic.
    bool is_normal_form() const;
    bool is_monic_normal_form() const;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

// Linear fractional transformation (a*t + b)/(c*t + d), ad - bc != 0:
// a unit of the composition semigroup.
struct MobiusUnit {
    Rational a, b, c, d;

    MobiusUnit() : a(1), b(0), c(0), d(1) {}
    MobiusUnit(Rational pa, Rational pb, Rational pc, Rational pd);

    static MobiusUnit identity() { return MobiusUnit(); }
    static MobiusUnit translation(const Rational& t) { return MobiusUnit(Rational(1), t, Rational(0), Rational(1)); }
    static MobiusUnit scaling(const Rational& s) { return MobiusUnit(s, Rational(0), Rational(0), Rational(1)); }

    Rational determinant() const { return a * d - b * c; }
    RationalFunction as_rational_function() const;
    P1Value apply(const P1Value& x) const;

    bool operator==(const MobiusUnit& o) const;
};

// Functional inverse: compose(u, mobius_inverse(u)) == t.
MobiusUnit mobius_inverse(const MobiusUnit& u);
// Composition u(w(t)) as a unit.
MobiusUnit mobius_compose(const MobiusUnit& u, const MobiusUnit& w);
// Extracts the unit from a degree-1 rational function.
MobiusUnit mobius_from(const RationalFunction& f);

// g(h(t)), reduced. Throws ConstantResult when either argument is constant.
RationalFunction compose(const RationalFunction& g, const RationalFunction& h);
RationalFunction compose(const MobiusUnit& u, const RationalFunction& f);
RationalFunction compose(const RationalFunction& f, const MobiusUnit& v);

struct NormalFormCertificate {
    MobiusUnit u;
    MobiusUnit v;
    RationalFunction normal; // u o f o v, monic normal form
};

// Deterministic normal form: v = t + a for the first probe point a in
// {0, 1, -1, 2, -2, ...} with f(a) != f(inf), u the Mobius map sending
// f(a) -> 0 and f(inf) -> inf scaled so the numerator comes out monic.
NormalFormCertificate to_normal_form(const RationalFunction& f);

// Canonical representative of h under left unit composition: the unique
// w o h in monic normal form. Requires h(0) != h(inf).
struct CanonicalRight {
    RationalFunction canonical;
    MobiusUnit unit; // canonical = unit o h
};
CanonicalRight canonical_right_component(const RationalFunction& h);

// Solves w o h1 = h2 for a unit w; nullopt when the functions are not
// left-unit equivalent. Independent of the canonicalization above.
std::optional<MobiusUnit> left_unit_matching(const RationalFunction& h1,
                                             const RationalFunction& h2);

} // namespace ratrel

#endif
