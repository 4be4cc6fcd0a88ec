#pragma once

#include "fhtw/csp.hpp"
#include "fhtw/decomposition.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace fhtw {

namespace detail {
struct SolverPlan;
}

/// Variable order used for lexicographic output: order of first appearance
/// in a preorder walk of the decomposition, ties by instance order.
std::vector<int> preorder_variable_order(const CspInstance& i, const FractionalHypertreeDecomposition& d);

/// Per-node solutions of I[B_t] that extend to a solution of the instance
/// induced by the subtree below t, as partial assignments. Exposed for
/// inspection and testing.
std::vector<std::vector<Assignment>> pruned_bag_solutions(const CspInstance& i,
                                                          const FractionalHypertreeDecomposition& d);

/// Bag lists, bottom-up compatibility pruning, then a top-down walk picking
/// the least compatible entry per node. Throws InvalidArgument when d is not
/// a valid decomposition of hypergraph_of(i).
std::optional<Assignment> solve_with_decomposition(const CspInstance& i, const FractionalHypertreeDecomposition& d);

/// solve_with_decomposition over an exact minimum-width decomposition.
/// Throws ResourceLimit above `cap` variables.
std::optional<Assignment> solve(const CspInstance& i, std::size_t cap = kDefaultWidthCap);

/// Lexicographic stream of all solutions (order from preorder_variable_order).
/// Single-owner; copies share the immutable preprocessing but not the cursor.
class SolutionStream {
  public:
    explicit SolutionStream(std::shared_ptr<const detail::SolverPlan> plan);

    /// Next solution, or empty once exhausted.
    std::optional<Assignment> next();

  private:
    void descend_from(std::size_t k);
    void write(std::size_t k);

    std::shared_ptr<const detail::SolverPlan> plan_;
    std::vector<const std::vector<std::size_t>*> bucket_;
    std::vector<std::size_t> pos_;
    Assignment current_;
    bool started_ = false;
    bool done_ = false;
};

/// Stream of the distinct restrictions of solutions to a set of output
/// variables, lexicographic in preorder_variable_order restricted to them.
class ProjectionStream {
  public:
    ProjectionStream(std::shared_ptr<const detail::SolverPlan> plan, std::vector<int> head);

    std::optional<Assignment> next();

  private:
    bool extensible(std::size_t depth) const;

    std::shared_ptr<const detail::SolverPlan> plan_;
    std::vector<int> head_;
    std::vector<int> values_;
    long depth_ = 0;
    bool started_ = false;
    bool done_ = false;
};

SolutionStream enumerate_all(const CspInstance& i, const FractionalHypertreeDecomposition& d);

/// Throws InvalidArgument when out_vars is empty or names an unknown variable.
ProjectionStream project_solutions(const CspInstance& i, const FractionalHypertreeDecomposition& d,
                                   const std::vector<int>& out_vars);

} // namespace fhtw
