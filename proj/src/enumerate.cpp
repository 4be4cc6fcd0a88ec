#include "fhtw/enumerate.hpp"

#include "fhtw/errors.hpp"
#include "tuple_hash.hpp"

#include <algorithm>
#include <unordered_set>

namespace fhtw {

namespace {

std::vector<int> checked_order(const CspInstance& i, const std::optional<std::vector<int>>& order) {
    const auto n = i.num_variables();
    if (!order) {
        std::vector<int> o(n);
        for (std::size_t v = 0; v < n; ++v)
            o[v] = static_cast<int>(v);
        return o;
    }
    if (order->size() != n)
        throw InvalidArgument("variable order is not a permutation");
    std::vector<bool> seen(n, false);
    for (int v : *order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("variable order is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    return *order;
}

// One constraint as seen at a given step: which prefix positions feed its
// projection, and the projected tuples.
struct StepCheck {
    std::vector<std::size_t> prefix_positions;
    std::unordered_set<Tuple, detail::TupleHash> allowed;
};

} // namespace

std::vector<Assignment> enumerate_by_cover(const CspInstance& i, const std::optional<std::vector<int>>& order,
                                           EnumerationStats* stats) {
    const auto ord = checked_order(i, order);
    const auto n = ord.size();
    const auto d = static_cast<int>(i.domain_size());
    std::vector<std::size_t> position(n);
    for (std::size_t j = 0; j < n; ++j)
        position[static_cast<std::size_t>(ord[j])] = j;

    std::vector<std::size_t> sizes;
    std::uint64_t checks = 0;
    std::vector<Tuple> list{Tuple{}};

    for (std::size_t j = 0; j < n; ++j) {
        const int var = ord[j];
        std::vector<StepCheck> step;
        for (const auto& c : i.constraints()) {
            if (std::find(c.scope.begin(), c.scope.end(), var) == c.scope.end())
                continue;
            std::vector<std::size_t> scope_positions;
            StepCheck check;
            for (std::size_t p = 0; p < c.scope.size(); ++p) {
                auto pos = position[static_cast<std::size_t>(c.scope[p])];
                if (pos <= j) {
                    scope_positions.push_back(p);
                    check.prefix_positions.push_back(pos);
                }
            }
            for (const auto& t : c.relation.tuples()) {
                Tuple key;
                key.reserve(scope_positions.size());
                for (auto p : scope_positions)
                    key.push_back(t[p]);
                check.allowed.insert(std::move(key));
            }
            step.push_back(std::move(check));
        }

        std::vector<Tuple> next;
        Tuple key;
        for (const auto& alpha : list) {
            Tuple extended = alpha;
            extended.push_back(0);
            for (int value = 0; value < d; ++value) {
                ++checks;
                extended.back() = value;
                bool ok = true;
                for (const auto& check : step) {
                    key.clear();
                    for (auto pos : check.prefix_positions)
                        key.push_back(extended[pos]);
                    if (!check.allowed.contains(key)) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    next.push_back(extended);
            }
        }
        list = std::move(next);
        sizes.push_back(list.size());
    }

    std::vector<Assignment> out;
    out.reserve(list.size());
    for (const auto& t : list) {
        Assignment a(n, kUnassigned);
        for (std::size_t j = 0; j < n; ++j)
            a[static_cast<std::size_t>(ord[j])] = t[j];
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    if (stats) {
        stats->list_sizes = std::move(sizes);
        stats->extension_checks = checks;
    }
    return out;
}

std::vector<std::size_t> intermediate_list_sizes(const CspInstance& i, const std::optional<std::vector<int>>& order) {
    EnumerationStats stats;
    enumerate_by_cover(i, order, &stats);
    return stats.list_sizes;
}

std::vector<int> min_degree_order(const CspInstance& i) {
    const auto n = i.num_variables();
    auto primal = primal_graph(hypergraph_of(i));
    std::vector<VertexSet> adjacent(n, VertexSet(n));
    for (const auto& e : primal.edges()) {
        auto m = e.members();
        if (m.size() == 2) {
            adjacent[static_cast<std::size_t>(m[0])].insert(m[1]);
            adjacent[static_cast<std::size_t>(m[1])].insert(m[0]);
        }
    }
    VertexSet remaining = VertexSet::full(n);
    std::vector<int> order;
    while (!remaining.empty()) {
        int best = -1;
        std::size_t best_degree = 0;
        for (int v : remaining.members()) {
            auto deg = (adjacent[static_cast<std::size_t>(v)] & remaining).count();
            if (best < 0 || deg < best_degree) {
                best = v;
                best_degree = deg;
            }
        }
        order.push_back(best);
        remaining.erase(best);
    }
    return order;
}

} // namespace fhtw
