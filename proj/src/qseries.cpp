#include "ratrel/qseries.hpp"

#include "ratrel/linalg.hpp"

#include <algorithm>

namespace ratrel {

long EtaQuotientSpec::exponent_sum() const {
    long sum = 0;
    for (const auto& [d, e] : factors) sum += d * e;
    return sum;
}

long EtaQuotientSpec::leading_exponent() const { return exponent_sum() / 24; }

LaurentSeries euler_product_series(long scale, long n_terms) {
    if (scale < 1 || n_terms < 1)
        raise("PrecisionExhausted", "euler product needs scale >= 1 and n_terms >= 1");
    std::vector<Rational> v(static_cast<std::size_t>(n_terms), Rational(0));
    v[0] = 1;
    for (long k = 1;; ++k) {
        const long g1 = scale * (k * (3 * k - 1)) / 2;
        const long g2 = scale * (k * (3 * k + 1)) / 2;
        if (g1 >= n_terms) break;
        const Rational sign((k % 2 == 0) ? 1 : -1);
        v[static_cast<std::size_t>(g1)] += sign;
        if (g2 < n_terms) v[static_cast<std::size_t>(g2)] += sign;
    }
    return LaurentSeries(0, std::move(v));
}

LaurentSeries eta_quotient_series(const EtaQuotientSpec& spec, long n_terms) {
    if (n_terms < 1) raise("PrecisionExhausted", "eta quotient needs n_terms >= 1");
    if (spec.exponent_sum() % 24 != 0)
        raise("NonIntegralEtaExponent",
              "eta exponent sum " + std::to_string(spec.exponent_sum()) + " is not divisible by 24");
    std::vector<Rational> one(static_cast<std::size_t>(n_terms), Rational(0));
    one[0] = 1;
    LaurentSeries acc(0, std::move(one));
    for (const auto& [d, e] : spec.factors) {
        if (e == 0) continue;
        const LaurentSeries base = euler_product_series(d, n_terms);
        const LaurentSeries power = base.pow(static_cast<std::size_t>(e > 0 ? e : -e));
        acc = e > 0 ? acc * power : divide(acc, power);
    }
    return acc.shifted(spec.leading_exponent()).plus_constant(spec.add_constant);
}

std::vector<RationalRelation> find_relations(const LaurentSeries& s1, const LaurentSeries& s2,
                                             long d) {
    if (d < 1) raise("InsufficientPrecision", "relation degree must be positive");
    if (s1.is_zero() || s2.is_zero() || s1.leading_exponent() != -1 || s2.leading_exponent() != -1)
        raise("InsufficientPrecision", "relation search expects series with leading exponent -1");
    constexpr long kGuard = 16;
    const long len = std::min(static_cast<long>(s1.length()), static_cast<long>(s2.length()));
    if (len < 2 * d + kGuard)
        raise("InsufficientPrecision", "need at least " + std::to_string(2 * d + kGuard) +
                                           " coefficients, have " + std::to_string(len));

    // Powers of s2 (index 1..d); index 0 is handled as the exact constant 1.
    std::vector<LaurentSeries> p(static_cast<std::size_t>(d) + 1);
    p[1] = s2;
    for (long i = 2; i <= d; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * s2;

    std::vector<RationalRelation> out;
    for (long k = 1; k <= d; ++k) {
        const LaurentSeries s1k = substitute_q_power(s1, k);
        // t_term[j] = s1(q^k) * s2^j for denominator column j.
        std::vector<LaurentSeries> t_term(static_cast<std::size_t>(d - k) + 1);
        for (long j = 0; j <= d - k; ++j)
            t_term[static_cast<std::size_t>(j)] = (j == 0) ? s1k : s1k * p[static_cast<std::size_t>(j)];

        // Unknowns: a_0..a_{d-1} then b_0..b_{d-k-1}; identity
        //   sum_j b_j T[j] + T[d-k] - sum_i a_i s2^i - s2^d = 0.
        const long n_a = d;
        const long n_b = d - k;
        const long lead = -d;

        auto solve_window = [&](long window) {
            Matrix mat(static_cast<std::size_t>(window),
                       std::vector<Rational>(static_cast<std::size_t>(n_a + n_b)));
            std::vector<Rational> rhs(static_cast<std::size_t>(window));
            for (long row = 0; row < window; ++row) {
                const long e = lead + row;
                for (long i = 0; i < n_a; ++i)
                    mat[row][static_cast<std::size_t>(i)] =
                        (i == 0) ? Rational(e == 0 ? 1 : 0) : p[static_cast<std::size_t>(i)].coefficient(e);
                for (long j = 0; j < n_b; ++j)
                    mat[row][static_cast<std::size_t>(n_a + j)] =
                        -t_term[static_cast<std::size_t>(j)].coefficient(e);
                rhs[static_cast<std::size_t>(row)] =
                    t_term[static_cast<std::size_t>(d - k)].coefficient(e) -
                    p[static_cast<std::size_t>(d)].coefficient(e);
            }
            return solve_linear_system(mat, rhs);
        };

        // Verifies a candidate against every tracked coefficient; returns
        // the verified residual precision on success.
        auto verify = [&](const std::vector<Rational>& sol) -> std::optional<long> {
            LaurentSeries lhs_side = t_term[static_cast<std::size_t>(d - k)];
            for (long j = 0; j < n_b; ++j) {
                const Rational& bj = sol[static_cast<std::size_t>(n_a + j)];
                if (bj != 0) lhs_side = lhs_side + t_term[static_cast<std::size_t>(j)].scaled(bj);
            }
            LaurentSeries rhs_side = p[static_cast<std::size_t>(d)];
            for (long i = 1; i < n_a; ++i) {
                const Rational& ai = sol[static_cast<std::size_t>(i)];
                if (ai != 0) rhs_side = rhs_side + p[static_cast<std::size_t>(i)].scaled(ai);
            }
            rhs_side = rhs_side.plus_constant(sol[0]);
            const LaurentSeries residual = lhs_side - rhs_side;
            if (!residual.is_zero()) return std::nullopt;
            return residual.precision() - lead;
        };

        // The paper's bound: fewer than 2d coefficients pin the system. A
        // degenerate window is caught by verification and retried once with
        // every available row.
        auto sol = solve_window(std::min(len, 2 * d + 4));
        std::optional<long> checked = sol ? verify(*sol) : std::nullopt;
        if (!checked) {
            sol = solve_window(len);
            checked = sol ? verify(*sol) : std::nullopt;
        }
        if (!checked) continue;

        std::vector<Rational> num_coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
        num_coeffs[static_cast<std::size_t>(d)] = 1;
        for (long i = 0; i < n_a; ++i) num_coeffs[static_cast<std::size_t>(i)] = (*sol)[static_cast<std::size_t>(i)];
        std::vector<Rational> den_coeffs(static_cast<std::size_t>(d - k) + 1, Rational(0));
        den_coeffs[static_cast<std::size_t>(d - k)] = 1;
        for (long j = 0; j < n_b; ++j)
            den_coeffs[static_cast<std::size_t>(j)] = (*sol)[static_cast<std::size_t>(n_a + j)];

        RationalRelation rel;
        rel.f = RationalFunction(Polynomial(std::move(num_coeffs)), Polynomial(std::move(den_coeffs)));
        rel.k = k;
        rel.verified_to = *checked;
        out.push_back(std::move(rel));
    }
    return out;
}

} // namespace ratrel
