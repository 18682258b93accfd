#include "ratrel/linalg.hpp"

#include <cassert>

namespace ratrel {
namespace {

using IRow = std::vector<Integer>;

// Scales each rational row to integers (common denominator per row).
std::vector<IRow> to_integer_rows(const Matrix& a, const std::vector<Rational>* b) {
    std::vector<IRow> rows(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t w = a[i].size() + (b ? 1 : 0);
        Integer l(1);
        for (const auto& v : a[i]) l = lcm(l, Integer(v.get_den()));
        if (b) l = lcm(l, Integer((*b)[i].get_den()));
        rows[i].resize(w);
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            Rational scaled = a[i][j] * Rational(l);
            rows[i][j] = scaled.get_num();
        }
        if (b) {
            Rational scaled = (*b)[i] * Rational(l);
            rows[i].back() = scaled.get_num();
        }
    }
    return rows;
}

Integer divide_exact(const Integer& num, const Integer& den) {
    assert(den != 0 && mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

struct Echelon {
    std::vector<IRow> rows;
    std::vector<std::size_t> pivot_col; // indexed by pivot row
    std::size_t width = 0;
};

// Fraction-free row echelon form (Bareiss). Entries stay integer; each
// elimination step divides exactly by the previous pivot.
Echelon echelonize(std::vector<IRow> rows, std::size_t ncols) {
    Echelon e;
    e.width = ncols;
    std::size_t rank = 0;
    Integer prev(1);
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        const Integer piv = rows[rank][col];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            const Integer factor = rows[i][col];
            for (std::size_t j = col; j < rows[rank].size(); ++j)
                rows[i][j] = divide_exact(rows[i][j] * piv - factor * rows[rank][j], prev);
        }
        prev = piv;
        e.pivot_col.push_back(col);
        ++rank;
    }
    e.rows = std::move(rows);
    return e;
}

} // namespace

std::optional<std::vector<Rational>> solve_linear_system(const Matrix& a,
                                                         const std::vector<Rational>& b) {
    if (a.empty()) return std::vector<Rational>();
    const std::size_t ncols = a[0].size();
    Echelon e = echelonize(to_integer_rows(a, &b), ncols);

    for (std::size_t i = e.pivot_col.size(); i < e.rows.size(); ++i)
        if (e.rows[i].back() != 0) return std::nullopt;

    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t r = e.pivot_col.size(); r-- > 0;) {
        const std::size_t pc = e.pivot_col[r];
        Rational acc(e.rows[r].back());
        for (std::size_t j = pc + 1; j < ncols; ++j)
            if (e.rows[r][j] != 0) acc -= Rational(e.rows[r][j]) * x[j];
        x[pc] = acc / Rational(e.rows[r][pc]);
        if (r == 0) break;
    }
    return x;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& a) {
    if (a.empty()) return {};
    const std::size_t ncols = a[0].size();
    Echelon e = echelonize(to_integer_rows(a, nullptr), ncols);

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = e.pivot_col.size(); r-- > 0;) {
            const std::size_t pc = e.pivot_col[r];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < ncols; ++j)
                if (e.rows[r][j] != 0 && v[j] != 0) acc -= Rational(e.rows[r][j]) * v[j];
            v[pc] = acc / Rational(e.rows[r][pc]);
            if (r == 0) break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ratrel
