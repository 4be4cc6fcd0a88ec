#include "simplex.hpp"

#include "fhtw/errors.hpp"

namespace fhtw::detail {

PackingSolution solve_packing(const std::vector<std::vector<std::size_t>>& rows, std::size_t num_columns) {
    const std::size_t m = rows.size();
    const std::size_t n = num_columns;
    const std::size_t width = n + m;

    std::vector<std::vector<Rational>> tableau(m, std::vector<Rational>(width, Rational(0)));
    std::vector<Rational> rhs(m, Rational(1));
    std::vector<std::size_t> basis(m);
    std::vector<bool> covered(n, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (auto j : rows[i]) {
            tableau[i][j] = 1;
            covered[j] = true;
        }
        tableau[i][n + i] = 1;
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!covered[j])
            throw InternalError("packing column in no row: program is unbounded");

    // reduced[j] = c_j - c_B B^-1 A_j
    std::vector<Rational> reduced(width, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        reduced[j] = 1;
    Rational value = 0;

    for (;;) {
        std::size_t entering = width;
        for (std::size_t j = 0; j < width; ++j)
            if (sgn(reduced[j]) > 0) {
                entering = j;
                break;
            }
        if (entering == width)
            break;

        std::size_t leaving = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tableau[i][entering]) <= 0)
                continue;
            Rational ratio = rhs[i] / tableau[i][entering];
            if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == m)
            throw InternalError("packing program unbounded");

        auto& prow = tableau[leaving];
        Rational pivot = prow[entering];
        for (auto& a : prow)
            a /= pivot;
        rhs[leaving] /= pivot;

        for (std::size_t i = 0; i < m; ++i) {
            if (i == leaving || sgn(tableau[i][entering]) == 0)
                continue;
            Rational f = tableau[i][entering];
            for (std::size_t j = 0; j < width; ++j)
                if (sgn(prow[j]) != 0)
                    tableau[i][j] -= f * prow[j];
            rhs[i] -= f * rhs[leaving];
        }
        Rational f = reduced[entering];
        for (std::size_t j = 0; j < width; ++j)
            if (sgn(prow[j]) != 0)
                reduced[j] -= f * prow[j];
        value += f * rhs[leaving];
        basis[leaving] = entering;
    }

    PackingSolution out;
    out.value = value;
    out.primal.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            out.primal[basis[i]] = rhs[i];
    out.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        out.dual[i] = -reduced[n + i];
    return out;
}

} // namespace fhtw::detail
