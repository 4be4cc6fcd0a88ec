#pragma once

#include "fhtw/csp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fhtw {

/// Counters from one run of enumerate_by_cover.
struct EnumerationStats {
    std::vector<std::size_t> list_sizes; ///< |L_1|, ..., |L_n|
    std::uint64_t extension_checks = 0;  ///< candidate (partial solution, value) pairs tested
};

/// All solutions, built by extending the solutions of the instance induced by
/// each prefix of `order` one variable at a time. `order` defaults to the
/// instance order and must be a permutation of the variables. The result is
/// sorted lexicographically in instance variable order.
std::vector<Assignment> enumerate_by_cover(const CspInstance& i, const std::optional<std::vector<int>>& order = {},
                                           EnumerationStats* stats = nullptr);

/// |L_1|, ..., |L_n| for the same run.
std::vector<std::size_t> intermediate_list_sizes(const CspInstance& i,
                                                 const std::optional<std::vector<int>>& order = {});

/// Greedy minimum-degree ordering on the primal graph (ties to the lower index).
std::vector<int> min_degree_order(const CspInstance& i);

} // namespace fhtw
