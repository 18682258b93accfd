#include "ratrel/ratfunc.hpp"

#include "ratrel/linalg.hpp"

#include <algorithm>

namespace ratrel {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) raise("ZeroDenominator", "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_divrem(num_, g).quotient;
        den_ = poly_divrem(den_, g).quotient;
    }
    const Rational lead = den_.leading_coefficient();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

std::size_t RationalFunction::degree() const {
    const std::size_t dn = num_.is_zero() ? 0 : (num_.is_constant() ? 0 : num_.degree());
    const std::size_t dd = den_.is_constant() ? 0 : den_.degree();
    return std::max(dn, dd);
}

P1Value RationalFunction::evaluate(const Rational& x) const {
    const Rational d = den_.evaluate(x);
    if (d == 0) return P1Value::infinity(); // gcd(num, den) = 1, so num(x) != 0 here
    return P1Value::finite(num_.evaluate(x) / d);
}

P1Value RationalFunction::value_at_infinity() const {
    const std::size_t dn = num_.is_zero() ? 0 : (num_.is_constant() ? 0 : num_.degree());
    const std::size_t dd = den_.is_constant() ? 0 : den_.degree();
    if (num_.is_zero()) return P1Value::finite(Rational(0));
    if (dn > dd) return P1Value::infinity();
    if (dn < dd) return P1Value::finite(Rational(0));
    return P1Value::finite(num_.leading_coefficient() / den_.leading_coefficient());
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) raise("ZeroDenominator", "division by the zero function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

bool RationalFunction::is_normal_form() const {
    if (is_constant()) return false;
    const std::size_t dn = num_.is_zero() ? 0 : (num_.is_constant() ? 0 : num_.degree());
    const std::size_t dd = den_.is_constant() ? 0 : den_.degree();
    return dn > dd && !num_.is_zero() && num_.coefficient(0) == 0;
}

bool RationalFunction::is_monic_normal_form() const {
    return is_normal_form() && num_.is_monic() && den_.is_monic();
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

MobiusUnit::MobiusUnit(Rational pa, Rational pb, Rational pc, Rational pd)
    : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)), d(std::move(pd)) {
    if (determinant() == 0) raise("ZeroDenominator", "singular linear fractional transformation");
}

RationalFunction MobiusUnit::as_rational_function() const {
    return RationalFunction(Polynomial{b, a}, Polynomial{d, c});
}

P1Value MobiusUnit::apply(const P1Value& x) const {
    if (x.infinite) {
        if (c == 0) return P1Value::infinity();
        return P1Value::finite(a / c);
    }
    const Rational bottom = c * x.value + d;
    if (bottom == 0) return P1Value::infinity();
    return P1Value::finite((a * x.value + b) / bottom);
}

bool MobiusUnit::operator==(const MobiusUnit& o) const {
    // Projective comparison: equal as transformations.
    return a * o.b == b * o.a && a * o.c == c * o.a && a * o.d == d * o.a &&
           b * o.c == c * o.b && b * o.d == d * o.b && c * o.d == d * o.c &&
           (a * o.a != 0 || b * o.b != 0 || c * o.c != 0 || d * o.d != 0);
}

MobiusUnit mobius_inverse(const MobiusUnit& u) { return MobiusUnit(u.d, -u.b, -u.c, u.a); }

MobiusUnit mobius_compose(const MobiusUnit& u, const MobiusUnit& w) {
    return MobiusUnit(u.a * w.a + u.b * w.c, u.a * w.b + u.b * w.d,
                      u.c * w.a + u.d * w.c, u.c * w.b + u.d * w.d);
}

MobiusUnit mobius_from(const RationalFunction& f) {
    if (f.degree() != 1) raise("IsUnit", "not a degree-1 function: " + f.to_string());
    return MobiusUnit(f.num().coefficient(1), f.num().coefficient(0),
                      f.den().coefficient(1), f.den().coefficient(0));
}

RationalFunction compose(const RationalFunction& g, const RationalFunction& h) {
    if (g.is_constant()) raise("ConstantResult", "left factor of a composition is constant");
    if (h.is_constant()) raise("ConstantResult", "right factor of a composition is constant");
    const std::size_t n = g.degree();
    // Common homogenization degree: g(h) = sum g_Ni hN^i hD^(n-i) / sum g_Di hN^i hD^(n-i).
    std::vector<Polynomial> hn_pow(n + 1), hd_pow(n + 1);
    hn_pow[0] = hd_pow[0] = Polynomial::one();
    for (std::size_t i = 1; i <= n; ++i) {
        hn_pow[i] = hn_pow[i - 1] * h.num();
        hd_pow[i] = hd_pow[i - 1] * h.den();
    }
    Polynomial top, bottom;
    for (std::size_t i = 0; i <= n; ++i) {
        const Polynomial cross = hn_pow[i] * hd_pow[n - i];
        if (g.num().coefficient(i) != 0) top += g.num().coefficient(i) * cross;
        if (g.den().coefficient(i) != 0) bottom += g.den().coefficient(i) * cross;
    }
    return RationalFunction(std::move(top), std::move(bottom));
}

RationalFunction compose(const MobiusUnit& u, const RationalFunction& f) {
    return RationalFunction(u.a * f.num() + u.b * f.den(), u.c * f.num() + u.d * f.den());
}

RationalFunction compose(const RationalFunction& f, const MobiusUnit& v) {
    const std::size_t n = std::max<std::size_t>(f.degree(), 1);
    const Polynomial top{v.b, v.a};
    const Polynomial bottom{v.d, v.c};
    std::vector<Polynomial> tp(n + 1), bp(n + 1);
    tp[0] = bp[0] = Polynomial::one();
    for (std::size_t i = 1; i <= n; ++i) {
        tp[i] = tp[i - 1] * top;
        bp[i] = bp[i - 1] * bottom;
    }
    Polynomial num, den;
    for (std::size_t i = 0; i <= n; ++i) {
        const Polynomial cross = tp[i] * bp[n - i];
        if (f.num().coefficient(i) != 0) num += f.num().coefficient(i) * cross;
        if (f.den().coefficient(i) != 0) den += f.den().coefficient(i) * cross;
    }
    return RationalFunction(std::move(num), std::move(den));
}

namespace {

// Mobius map sending y0 -> 0 and yinf -> inf (distinct projective points).
MobiusUnit pinning_unit(const P1Value& y0, const P1Value& yinf) {
    if (yinf.infinite) return MobiusUnit::translation(-y0.value);
    if (y0.infinite) return MobiusUnit(Rational(0), Rational(1), Rational(1), -yinf.value);
    return MobiusUnit(Rational(1), -y0.value, Rational(1), -yinf.value);
}

} // namespace

NormalFormCertificate to_normal_form(const RationalFunction& f) {
    if (f.is_constant()) raise("ConstantResult", "normal form of a constant");
    const P1Value yinf = f.value_at_infinity();

    Rational probe(0);
    P1Value y0 = f.evaluate(probe);
    for (long k = 1; y0 == yinf; ++k) {
        // 0, 1, -1, 2, -2, ... ; at most deg f probes can collide with f(inf).
        probe = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
        y0 = f.evaluate(probe);
    }

    const MobiusUnit v = MobiusUnit::translation(probe);
    const MobiusUnit u_pin = pinning_unit(y0, yinf);
    RationalFunction shifted = compose(f, v);
    RationalFunction pinned = compose(u_pin, shifted);

    const Rational lead = pinned.num().leading_coefficient();
    const MobiusUnit u = mobius_compose(MobiusUnit::scaling(Rational(1) / lead), u_pin);
    RationalFunction normal(pinned.num() * (Rational(1) / lead), pinned.den());
    return {u, v, std::move(normal)};
}

CanonicalRight canonical_right_component(const RationalFunction& h) {
    const P1Value y0 = h.evaluate(Rational(0));
    const P1Value yinf = h.value_at_infinity();
    if (y0 == yinf)
        raise("NotNormalForm", "no left unit can bring " + h.to_string() + " to normal form");
    const MobiusUnit w_pin = pinning_unit(y0, yinf);
    RationalFunction pinned = compose(w_pin, h);
    const Rational lead = pinned.num().leading_coefficient();
    const MobiusUnit w = mobius_compose(MobiusUnit::scaling(Rational(1) / lead), w_pin);
    RationalFunction canonical(pinned.num() * (Rational(1) / lead), pinned.den());
    return {std::move(canonical), w};
}

std::optional<MobiusUnit> left_unit_matching(const RationalFunction& h1,
                                             const RationalFunction& h2) {
    if (h1.is_constant() || h2.is_constant() || h1.degree() != h2.degree()) return std::nullopt;
    // (a h1N + b h1D) h2D == (c h1N + d h1D) h2N, linear homogeneous in a,b,c,d.
    const Polynomial p1 = h1.num() * h2.den();
    const Polynomial p2 = h1.den() * h2.den();
    const Polynomial p3 = h1.num() * h2.num();
    const Polynomial p4 = h1.den() * h2.num();
    std::size_t deg = 0;
    for (const Polynomial* p : {&p1, &p2, &p3, &p4})
        if (!p->is_zero()) deg = std::max(deg, p->is_constant() ? 0 : p->degree());
    Matrix m(deg + 1, std::vector<Rational>(4));
    for (std::size_t i = 0; i <= deg; ++i) {
        m[i][0] = p1.coefficient(i);
        m[i][1] = p2.coefficient(i);
        m[i][2] = -p3.coefficient(i);
        m[i][3] = -p4.coefficient(i);
    }
    for (const auto& v : nullspace(m)) {
        const Rational det = v[0] * v[3] - v[1] * v[2];
        if (det != 0) {
            MobiusUnit w(v[0], v[1], v[2], v[3]);
            if (compose(w, h1) == h2) return w;
        }
    }
    return std::nullopt;
}

} // namespace ratrel
