#include "ratrel/decompose.hpp"

#include "ratrel/linalg.hpp"

#include <algorithm>

namespace ratrel {

RationalFunction DecompositionChain::compose_all() const {
    RationalFunction acc = components.front();
    for (std::size_t i = 1; i < components.size(); ++i) acc = compose(acc, components[i]);
    return acc;
}

std::vector<std::size_t> DecompositionChain::degree_sequence() const {
    std::vector<std::size_t> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.degree());
    return out;
}

std::vector<RationalFunction> candidate_right_components(const RationalFunction& f) {
    if (!f.is_monic_normal_form())
        raise("NotNormalForm", "candidate enumeration requires monic normal form: " + f.to_string());
    const std::size_t n = f.degree();

    const Factorization fac_num = poly_factor(f.num());
    const Factorization fac_den = poly_factor(f.den());

    DivisorFilter num_filter;
    num_filter.require_t_factor = true; // h(0) = 0 forces t | A
    num_filter.degree_ok = [n](std::size_t d) { return d >= 2 && d < n && n % d == 0; };
    const std::vector<Polynomial> as = monic_divisors(fac_num, num_filter);
    const std::vector<Polynomial> bs = monic_divisors(fac_den);

    std::vector<RationalFunction> out;
    for (const Polynomial& a : as) {
        const std::size_t da = a.degree();
        for (const Polynomial& b : bs) {
            const std::size_t db = b.is_constant() ? 0 : b.degree();
            if (db >= da) continue; // h(inf) = inf needs deg A > deg B
            out.emplace_back(a, b); // gcd(A, B) = 1 since gcd(f_N, f_D) = 1
        }
    }
    return out;
}

std::optional<RationalFunction> solve_left_component(const RationalFunction& f,
                                                     const RationalFunction& h) {
    if (!f.is_monic_normal_form() || !h.is_monic_normal_form())
        raise("NotNormalForm", "left-component solving requires monic normal forms");
    const std::size_t n = f.degree();
    const std::size_t m = h.degree();
    if (n % m != 0)
        raise("DegreeNotDivisible", "deg h = " + std::to_string(m) +
                                        " does not divide deg f = " + std::to_string(n));
    const std::size_t r = n / m;

    // powers[i] = hN^i * hD^(r-i); the composed numerator and denominator of
    // g o h are Q-linear combinations of these, and no cancellation occurs.
    std::vector<Polynomial> powers(r + 1);
    for (std::size_t i = 0; i <= r; ++i) powers[i] = h.num().pow(i) * h.den().pow(r - i);

    const std::size_t rows = n + 1;
    auto column = [&](const Polynomial& p, Matrix& mat, std::size_t col) {
        for (std::size_t row = 0; row < rows; ++row) mat[row][col] = p.coefficient(row);
    };

    // Numerator identity: f_N - hN^r = sum_{i=1..r-1} c_i powers[i].
    std::vector<Rational> num_sol;
    if (r >= 2) {
        Matrix mat(rows, std::vector<Rational>(r - 1));
        for (std::size_t i = 1; i < r; ++i) column(powers[i], mat, i - 1);
        std::vector<Rational> rhs(rows);
        const Polynomial target = f.num() - powers[r];
        for (std::size_t row = 0; row < rows; ++row) rhs[row] = target.coefficient(row);
        auto sol = solve_linear_system(mat, rhs);
        if (!sol) return std::nullopt;
        num_sol = std::move(*sol);
    } else if (f.num() != powers[1]) {
        return std::nullopt;
    }

    // Denominator identity: f_D = sum_{j=0..r-1} d_j powers[j].
    Matrix mat(rows, std::vector<Rational>(r));
    for (std::size_t j = 0; j < r; ++j) column(powers[j], mat, j);
    std::vector<Rational> rhs(rows);
    for (std::size_t row = 0; row < rows; ++row) rhs[row] = f.den().coefficient(row);
    auto den_sol = solve_linear_system(mat, rhs);
    if (!den_sol) return std::nullopt;

    std::vector<Rational> gn(r + 1, Rational(0));
    gn[r] = 1;
    for (std::size_t i = 1; i < r; ++i) gn[i] = num_sol[i - 1];
    RationalFunction g(Polynomial(std::move(gn)), Polynomial(std::move(*den_sol)));
    if (compose(g, h) != f)
        raise("NotNormalForm", "internal: left-component candidate failed verification");
    return g;
}

const std::vector<DecomposeEngine::NormalSplit>& DecomposeEngine::splits_of_normal(
    const RationalFunction& normal) {
    const std::string key = normal.to_string();
    auto it = split_memo_.find(key);
    if (it != split_memo_.end()) return it->second;

    std::vector<NormalSplit> splits;
    for (const RationalFunction& h : candidate_right_components(normal)) {
        auto g = solve_left_component(normal, h);
        if (g) splits.push_back({h, std::move(*g)});
    }
    return split_memo_.emplace(key, std::move(splits)).first->second;
}

bool DecomposeEngine::indecomposable_normal(const RationalFunction& normal) {
    const std::size_t n = normal.degree();
    bool prime = n >= 2;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) prime = false;
    if (prime) return true; // degree multiplicativity rules out splits

    const std::string key = normal.to_string();
    auto it = verdict_memo_.find(key);
    if (it != verdict_memo_.end()) return it->second;
    const bool verdict = splits_of_normal(normal).empty();
    verdict_memo_.emplace(key, verdict);
    return verdict;
}

std::vector<Decomposition> DecomposeEngine::decompose_all(const RationalFunction& f) {
    if (f.is_constant()) raise("ConstantResult", "cannot decompose a constant");
    if (f.degree() == 1) raise("IsUnit", "units have only trivial decompositions");
    const NormalFormCertificate cert = to_normal_form(f);
    const MobiusUnit uinv = mobius_inverse(cert.u);
    const MobiusUnit vinv = mobius_inverse(cert.v);

    std::vector<Decomposition> out;
    for (const NormalSplit& s : splits_of_normal(cert.normal))
        out.push_back({compose(uinv, s.left), compose(s.right, vinv)});
    return out;
}

bool DecomposeEngine::is_indecomposable(const RationalFunction& f) {
    if (f.is_constant() || f.degree() == 1) return false; // units excluded by definition
    return indecomposable_normal(to_normal_form(f).normal);
}

std::vector<DecompositionChain> DecomposeEngine::chains_impl(const RationalFunction& f) {
    const std::string key = f.to_string();
    auto it = chain_memo_.find(key);
    if (it != chain_memo_.end()) return it->second;

    const NormalFormCertificate cert = to_normal_form(f);
    const MobiusUnit uinv = mobius_inverse(cert.u);
    const MobiusUnit vinv = mobius_inverse(cert.v);
    const auto& splits = splits_of_normal(cert.normal);

    std::vector<DecompositionChain> out;
    if (splits.empty()) {
        out.push_back(DecompositionChain{{f}});
    } else {
        // Every refined chain ends in an indecomposable right component, and
        // canonical candidates make the classes pairwise distinct, so the
        // recursion enumerates each chain exactly once.
        for (const NormalSplit& s : splits) {
            if (!indecomposable_normal(s.right)) continue;
            const RationalFunction right_mapped = compose(s.right, vinv);
            for (const DecompositionChain& sub : chains_impl(compose(uinv, s.left))) {
                DecompositionChain chain = sub;
                chain.components.push_back(right_mapped);
                out.push_back(std::move(chain));
            }
        }
        std::sort(out.begin(), out.end(), [](const DecompositionChain& x, const DecompositionChain& y) {
            if (x.components.size() != y.components.size())
                return x.components.size() < y.components.size();
            for (std::size_t i = 0; i < x.components.size(); ++i) {
                const std::string xs = x.components[i].to_string();
                const std::string ys = y.components[i].to_string();
                if (xs != ys) return xs < ys;
            }
            return false;
        });
    }
    chain_memo_.emplace(key, out);
    return out;
}

std::vector<DecompositionChain> DecomposeEngine::refine_chains(const RationalFunction& f) {
    if (f.is_constant()) raise("ConstantResult", "cannot decompose a constant");
    if (f.degree() == 1) raise("IsUnit", "units have only trivial decompositions");
    return chains_impl(f);
}

std::vector<Decomposition> decompose_all(const RationalFunction& f) {
    DecomposeEngine engine;
    return engine.decompose_all(f);
}

bool is_indecomposable(const RationalFunction& f) {
    DecomposeEngine engine;
    return engine.is_indecomposable(f);
}

std::vector<DecompositionChain> refine_chains(const RationalFunction& f) {
    DecomposeEngine engine;
    return engine.refine_chains(f);
}

} // namespace ratrel
