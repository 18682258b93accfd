#include "ratrel/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace ratrel {
namespace {

// ---------------------------------------------------------------------
// Arithmetic in F_p[t] for word-sized p. Vectors carry no trailing zeros.
// ---------------------------------------------------------------------

using ModPoly = std::vector<std::int64_t>;

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod_pow_int(std::int64_t base, std::int64_t e, std::int64_t p) {
    std::int64_t acc = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) { return mod_pow_int((a % p + p) % p, p - 2, p); }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(out);
    return out;
}

ModPoly mp_sub(ModPoly a, const ModPoly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    mp_trim(a);
    return a;
}

// Remainder of a by monic... by arbitrary nonzero b.
ModPoly mp_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
    const std::int64_t linv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
        std::int64_t q = a.back() * linv % p;
        if (q != 0) {
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - q * b[j]) % p + p) % p;
        }
        a.pop_back();
        mp_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, std::int64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::int64_t inv = mod_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

ModPoly mp_derivative(const ModPoly& a, std::int64_t p) {
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = static_cast<std::int64_t>(i % p) * a[i] % p;
    mp_trim(d);
    return d;
}

ModPoly mp_pow_mod(ModPoly base, Integer e, const ModPoly& m, std::int64_t p) {
    ModPoly acc{1};
    base = mp_rem(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mp_rem(mp_mul(acc, base, p), m, p);
        e >>= 1;
        if (e > 0) base = mp_rem(mp_mul(base, base, p), m, p);
    }
    return acc;
}

// Berlekamp factorization of a monic squarefree f in F_p[t]. The splitting
// sweep tries every c in F_p, which is fine for the small primes used here.
std::vector<ModPoly> berlekamp(const ModPoly& f, std::int64_t p) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};

    // Q[i] = t^(p*i) mod f, as rows of an n x n matrix over F_p.
    std::vector<std::vector<std::int64_t>> Q(n, std::vector<std::int64_t>(n, 0));
    ModPoly tp = mp_pow_mod(ModPoly{0, 1}, Integer(static_cast<long>(p)), f, p);
    ModPoly cur{1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) Q[i][j] = cur[j];
        if (i + 1 < n) cur = mp_rem(mp_mul(cur, tp, p), f, p);
    }
    // Nullspace of (Q - I)^T ... we need v with v*Q = v, i.e. rows as images.
    // Build M = Q^T - I and find its nullspace by Gaussian elimination.
    std::vector<std::vector<std::int64_t>> M(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = ((Q[j][i] - (i == j ? 1 : 0)) % p + p) % p;

    std::vector<long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t sel = rank;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(M[sel], M[rank]);
        std::int64_t inv = mod_inv(M[rank][col], p);
        for (auto& x : M[rank]) x = x * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            std::int64_t factor = M[r][col];
            for (std::size_t j = 0; j < n; ++j) M[r][j] = ((M[r][j] - factor * M[rank][j]) % p + p) % p;
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<ModPoly> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        ModPoly v(n, 0);
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = (p - M[pivot_of_col[c2]][col]) % p;
        mp_trim(v);
        basis.push_back(std::move(v));
    }

    std::vector<ModPoly> factors{f};
    const std::size_t target = basis.size(); // number of irreducible factors
    for (const ModPoly& v : basis) {
        if (factors.size() == target) break;
        std::vector<ModPoly> next;
        for (ModPoly& g : factors) {
            if (g.size() - 1 <= 1) {
                next.push_back(std::move(g));
                continue;
            }
            ModPoly rest = g;
            for (std::int64_t c = 0; c < p && rest.size() > 1; ++c) {
                ModPoly shifted = v;
                if (shifted.empty()) shifted.assign(1, 0);
                shifted.resize(std::max<std::size_t>(shifted.size(), 1));
                shifted[0] = ((shifted[0] - c) % p + p) % p;
                mp_trim(shifted);
                ModPoly d = shifted.empty() ? ModPoly{} : mp_gcd(rest, shifted, p);
                if (d.size() > 1 && d.size() < rest.size()) {
                    next.push_back(d);
                    // rest /= d
                    ModPoly q;
                    {
                        // exact division in F_p[t]
                        ModPoly num = rest;
                        q.assign(num.size() - d.size() + 1, 0);
                        std::int64_t linv = mod_inv(d.back(), p);
                        for (long i = static_cast<long>(num.size()) - 1;
                             i >= static_cast<long>(d.size()) - 1; --i) {
                            std::int64_t qc = num[i] * linv % p;
                            q[i - d.size() + 1] = qc;
                            if (qc != 0)
                                for (std::size_t j = 0; j < d.size(); ++j)
                                    num[i - d.size() + 1 + j] =
                                        ((num[i - d.size() + 1 + j] - qc * d[j]) % p + p) % p;
                        }
                    }
                    rest = std::move(q);
                }
            }
            if (!rest.empty() && rest.size() > 1) next.push_back(std::move(rest));
        }
        factors = std::move(next);
    }
    // Normalize monic and drop accidental constants.
    std::vector<ModPoly> out;
    for (auto& g : factors) {
        if (g.size() <= 1) continue;
        if (g.back() != 1) {
            std::int64_t inv = mod_inv(g.back(), p);
            for (auto& c : g) c = c * inv % p;
        }
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------
// Hensel lifting of a monic factorization from mod p to mod p^K.
// ---------------------------------------------------------------------

using ZPoly = std::vector<Integer>; // dense, may carry high zeros internally

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_mod(ZPoly a, const Integer& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    zp_trim(a);
    return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return zp_mod(std::move(out), m);
}

ZPoly zp_add(ZPoly a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zp_mod(std::move(a), m);
}

ZPoly zp_sub(ZPoly a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zp_mod(std::move(a), m);
}

// Division with remainder by a monic polynomial, coefficients mod m.
void zp_divrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
    r = zp_mod(a, m);
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, Integer(0));
    for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        Integer qc = r[i];
        if (qc == 0) continue;
        q[i - b.size() + 1] = qc;
        for (std::size_t j = 0; j < b.size(); ++j) {
            Integer& cell = r[i - b.size() + 1 + j];
            cell = (cell - qc * b[j]) % m;
            if (cell < 0) cell += m;
        }
    }
    zp_trim(q);
    zp_trim(r);
}

// Extended gcd of coprime g, h mod p: s*g + t*h = 1.
void zp_bezout(const ZPoly& g, const ZPoly& h, const Integer& p, ZPoly& s, ZPoly& t) {
    // Standard extended Euclid over the field Z/p (p prime).
    ZPoly r0 = zp_mod(g, p), r1 = zp_mod(h, p);
    ZPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
    while (!r1.empty()) {
        // make r1 monic for the monic division helper
        Integer lead = r1.back();
        Integer inv;
        mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), p.get_mpz_t());
        ZPoly r1m = r1;
        for (auto& c : r1m) c = c * inv % p;
        ZPoly q, rem;
        zp_divrem_monic(r0, r1m, p, q, rem);
        for (auto& c : q) c = c * inv % p; // undo the monic scaling: r0 = (q*inv)*r1 + rem
        ZPoly snew = zp_sub(s0, zp_mul(q, s1, p), p);
        ZPoly tnew = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
        t0 = std::move(t1);
        t1 = std::move(tnew);
    }
    // r0 is a nonzero constant gcd; scale to 1.
    Integer c0 = r0.empty() ? Integer(1) : r0[0];
    Integer inv;
    mpz_invert(inv.get_mpz_t(), c0.get_mpz_t(), p.get_mpz_t());
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

// Quadratic two-factor Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m)
// with f, g, h monic; lifts everything to mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
    const Integer m2 = m * m;
    ZPoly e = zp_sub(f, zp_mul(g, h, m2), m2);
    ZPoly q, r;
    zp_divrem_monic(zp_mul(s, e, m2), h, m2, q, r);
    ZPoly gnew = zp_add(zp_add(g, zp_mul(t, e, m2), m2), zp_mul(q, g, m2), m2);
    ZPoly hnew = zp_add(h, r, m2);

    ZPoly b = zp_sub(zp_add(zp_mul(s, gnew, m2), zp_mul(t, hnew, m2), m2), ZPoly{Integer(1)}, m2);
    ZPoly c, d;
    zp_divrem_monic(zp_mul(s, b, m2), hnew, m2, c, d);
    ZPoly snew = zp_sub(s, d, m2);
    ZPoly tnew = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, gnew, m2), m2);

    g = std::move(gnew);
    h = std::move(hnew);
    s = std::move(snew);
    t = std::move(tnew);
}

// Lifts the coprime monic factorization f = prod(parts) from mod p to mod
// p^(2^levels) >= bound via a balanced product tree.
void hensel_lift_tree(const ZPoly& f, std::vector<ZPoly>& parts, const Integer& p, const Integer& target) {
    if (parts.size() == 1) {
        parts[0] = zp_mod(f, target);
        return;
    }
    const std::size_t half = parts.size() / 2;
    ZPoly g{Integer(1)}, h{Integer(1)};
    for (std::size_t i = 0; i < half; ++i) g = zp_mul(g, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) h = zp_mul(h, parts[i], p);
    ZPoly s, t;
    zp_bezout(g, h, p, s, t);
    Integer m = p;
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    std::vector<ZPoly> left(parts.begin(), parts.begin() + half);
    std::vector<ZPoly> right(parts.begin() + half, parts.end());
    hensel_lift_tree(g, left, p, target);
    hensel_lift_tree(h, right, p, target);
    parts.clear();
    parts.insert(parts.end(), left.begin(), left.end());
    parts.insert(parts.end(), right.begin(), right.end());
}

// ---------------------------------------------------------------------
// Zassenhaus on a monic squarefree integer polynomial.
// ---------------------------------------------------------------------

Integer symmetric(const Integer& v, const Integer& m) {
    Integer r = v % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

Polynomial zpoly_to_poly(const ZPoly& a) {
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
    return Polynomial(std::move(c));
}

ZPoly poly_to_zpoly(const Polynomial& a) {
    ZPoly out(a.is_zero() ? 0 : a.degree() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coefficient(i).get_num(); // caller guarantees integer coefficients
    }
    return out;
}

// Mignotte-style bound: any monic factor of monic M has coefficients
// bounded by 2^n * ||M||_2.
Integer factor_coeff_bound(const ZPoly& m) {
    Integer norm2(0);
    for (const auto& c : m) norm2 += c * c;
    Integer root = sqrt(norm2) + 1;
    Integer b = root << (m.size() - 1);
    return b;
}

const std::int64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::vector<Polynomial> factor_monic_squarefree_integer(const Polynomial& m) {
    const std::size_t n = m.degree();
    if (n == 1) return {m};

    ZPoly zm = poly_to_zpoly(m);

    // Pick the prime (among a fixed list) giving the fewest modular factors.
    std::int64_t best_p = 0;
    std::vector<ModPoly> best_factors;
    int tried = 0;
    for (std::int64_t p : kPrimes) {
        ModPoly fp(zm.size());
        for (std::size_t i = 0; i < zm.size(); ++i) {
            Integer r = zm[i] % p;
            if (r < 0) r += p;
            fp[i] = r.get_si();
        }
        mp_trim(fp);
        if (fp.size() != zm.size()) continue; // p divides the leading coefficient (impossible: monic)
        ModPoly d = mp_gcd(fp, mp_derivative(fp, p), p);
        if (d.size() > 1) continue; // not squarefree mod p
        std::vector<ModPoly> fs = berlekamp(fp, p);
        if (best_p == 0 || fs.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(fs);
        }
        if (best_factors.size() == 1) return {m}; // irreducible mod p => irreducible over Q
        if (++tried >= 4) break;
    }
    if (best_p == 0) raise("ZeroPolynomial", "no usable prime for factoring (unexpected)");

    // Lift to p^k beyond twice the factor bound.
    const Integer bound = factor_coeff_bound(zm);
    Integer target(best_p);
    while (target <= 2 * bound) target *= target;
    std::vector<ZPoly> lifted(best_factors.size());
    for (std::size_t i = 0; i < best_factors.size(); ++i) {
        lifted[i].assign(best_factors[i].size(), Integer(0));
        for (std::size_t j = 0; j < best_factors[i].size(); ++j) lifted[i][j] = best_factors[i][j];
    }
    hensel_lift_tree(zm, lifted, Integer(best_p), target);
    // The tree recomputes the actual modulus as squares of p; recompute it.
    Integer modulus(best_p);
    while (modulus < target) modulus = modulus * modulus;

    // Subset recombination, smallest cardinality first.
    std::vector<Polynomial> result;
    std::vector<ZPoly> pool = std::move(lifted);
    ZPoly rest = zm;
    Polynomial rest_poly = m;

    std::size_t card = 1;
    while (2 * card <= pool.size()) {
        bool found_at_this_card = false;
        std::vector<std::size_t> idx(card);
        for (std::size_t i = 0; i < card; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{Integer(1)};
            for (std::size_t i : idx) cand = zp_mul(cand, pool[i], modulus);
            for (auto& c : cand) c = symmetric(c, modulus);
            Polynomial candidate = zpoly_to_poly(cand);
            if (poly_divides(candidate, rest_poly)) {
                result.push_back(candidate);
                rest_poly = poly_divrem(rest_poly, candidate).quotient;
                std::vector<ZPoly> keep;
                for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    keep.push_back(pool[i]);
                }
                pool = std::move(keep);
                found_at_this_card = true;
                break; // restart the same cardinality with the reduced pool
            }
            // next combination
            long pos = static_cast<long>(card) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found_at_this_card) ++card;
    }
    if (!rest_poly.is_constant()) result.push_back(rest_poly);
    return result;
}

// Yun squarefree decomposition of a monic polynomial over Q:
// returns pairs (s_i, i) with m = prod s_i^i, each s_i monic squarefree.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& m) {
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial a = m;
    if (a.degree() == 0) return out;
    Polynomial d = a.derivative();
    Polynomial g = poly_gcd(a, d);
    if (g.is_one()) {
        out.emplace_back(a, 1);
        return out;
    }
    Polynomial b = poly_divrem(a, g).quotient;
    Polynomial c = poly_divrem(d, g).quotient;
    Polynomial z = c - b.derivative();
    int mult = 1;
    while (!b.is_constant()) {
        Polynomial s = poly_gcd(b, z.is_zero() ? b : z);
        if (!s.is_constant()) out.emplace_back(s.monic(), mult);
        b = poly_divrem(b, s).quotient;
        z = poly_divrem(z, s).quotient - b.derivative();
        ++mult;
    }
    return out;
}

} // namespace

Polynomial Factorization::expand() const {
    Polynomial acc(unit);
    for (const auto& [f, e] : factors) acc *= f.pow(static_cast<std::size_t>(e));
    return acc;
}

Factorization poly_factor(const Polynomial& a) {
    if (a.is_zero()) raise("ZeroPolynomial", "factorization of the zero polynomial");
    Factorization out;
    out.unit = a.leading_coefficient();
    if (a.is_constant()) return out;

    Polynomial m = a.monic();
    std::map<std::string, std::pair<Polynomial, int>> acc; // keyed for dedup across squarefree parts

    for (const auto& [sqfree, mult] : squarefree_decomposition(m)) {
        // Clear denominators; factor the primitive integer image.
        IntegerPolynomial ip = to_integer_primitive(sqfree);
        std::vector<Rational> coeffs(ip.coeffs.size());
        for (std::size_t i = 0; i < ip.coeffs.size(); ++i) coeffs[i] = Rational(ip.coeffs[i]);
        Polynomial primitive(std::move(coeffs));

        std::vector<Polynomial> irreducibles;
        const Rational lead = primitive.leading_coefficient();
        if (lead == 1) {
            irreducibles = factor_monic_squarefree_integer(primitive);
        } else {
            // Monic reduction: M(t) = b^(n-1) * P(t/b) is monic with integer
            // coefficients; factors map back through t -> b*t.
            const std::size_t n = primitive.degree();
            std::vector<Rational> mc(n + 1);
            mc[n] = 1;
            Rational pw(1);
            for (std::size_t i = n; i-- > 0;) {
                mc[i] = primitive.coefficient(i) * pw;
                pw *= lead;
            }
            Polynomial monic_image{std::vector<Rational>(mc)};
            for (const Polynomial& g : factor_monic_squarefree_integer(monic_image))
                irreducibles.push_back(g.scale_argument(lead).monic());
        }
        for (const Polynomial& f : irreducibles) {
            Polynomial mf = f.monic();
            auto key = mf.to_string();
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, std::make_pair(mf, mult));
            else
                it->second.second += mult;
        }
    }
    for (auto& [k, v] : acc) out.factors.push_back(std::move(v));
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_compare(x.first, y.first) < 0; });
    return out;
}

bool DivisorFilter::accepts(const Polynomial& d) const {
    if (degree_ok && !degree_ok(d.is_zero() ? 0 : (d.is_constant() ? 0 : d.degree()))) return false;
    if (require_t_factor && d.coefficient(0) != 0) return false;
    if (require_t_factor && d.is_constant()) return false;
    return true;
}

std::vector<Polynomial> monic_divisors(const Factorization& fac, const DivisorFilter& filter) {
    std::vector<Polynomial> out;
    std::vector<int> exps(fac.factors.size(), 0);
    while (true) {
        Polynomial d = Polynomial::one();
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) d *= fac.factors[i].first.pow(static_cast<std::size_t>(exps[i]));
        if (filter.accepts(d)) out.push_back(std::move(d));
        // odometer increment
        std::size_t pos = 0;
        while (pos < exps.size() && exps[pos] == fac.factors[pos].second) {
            exps[pos] = 0;
            ++pos;
        }
        if (pos == exps.size()) break;
        ++exps[pos];
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& x, const Polynomial& y) {
        return poly_compare(x, y) < 0;
    });
    return out;
}

} // namespace ratrel
