#pragma once

#include "fhtw/rational.hpp"

#include <cstddef>
#include <vector>

namespace fhtw::detail {

struct PackingSolution {
    Rational value;
    std::vector<Rational> primal; ///< per column
    std::vector<Rational> dual;   ///< per row; an optimal solution of the covering dual
};

/// max sum(y) s.t. sum_{j in rows[i]} y_j <= 1 for each row, y >= 0.
///
/// Dense tableau simplex over exact rationals with Bland's rule, started from
/// the all-slack basis (feasible because the right-hand side is 1). Every
/// column must occur in some row, otherwise the program is unbounded.
PackingSolution solve_packing(const std::vector<std::vector<std::size_t>>& rows, std::size_t num_columns);

} // namespace fhtw::detail
