#pragma once

#include "fhtw/hypergraph.hpp"
#include "fhtw/rational.hpp"
#include "fhtw/weights.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fhtw {

/// Rooted tree of bags. Node i has parent parent[i]; the root has -1.
struct TreeDecomposition {
    std::vector<std::string> ids;
    std::vector<int> parent;
    std::vector<VertexSet> bags;

    std::size_t size() const { return bags.size(); }
    /// Appends a node and returns its index.
    int add_node(VertexSet bag, int parent_node, std::string id = {});
    /// Index of the unique root; throws InvalidArgument when the parent
    /// array is not a rooted tree.
    int root() const;
    std::vector<std::vector<int>> children() const;
    /// Nodes in preorder, children visited in index order.
    std::vector<int> preorder() const;
};

/// Tree decomposition with integral guards (edge indices of the host).
struct GeneralizedHypertreeDecomposition {
    TreeDecomposition tree;
    std::vector<std::vector<std::size_t>> guards;
};

/// Tree decomposition with fractional guards.
struct FractionalHypertreeDecomposition {
    TreeDecomposition tree;
    std::vector<FractionalWeighting> guards;
};

/// 0/1 weighting view of a generalized decomposition.
FractionalHypertreeDecomposition to_fractional(const Hypergraph& h, const GeneralizedHypertreeDecomposition& d);

struct ValidationReport {
    bool valid = false;
    Rational width;
    std::vector<std::string> violations;
    /// Whether guard coverage restricted to each subtree stays inside the
    /// node's bag. Not defined for plain tree decompositions.
    std::optional<bool> special_condition;
};

/// Checks edge coverage, connectedness of every vertex's occurrence set, and
/// (for guarded decompositions) that each bag is covered by its guard.
/// Width is max|B_t|-1, max|C_t| or max weight(gamma_t). References to
/// vertices or edges outside h throw InvalidArgument.
ValidationReport validate(const Hypergraph& h, const TreeDecomposition& d);
ValidationReport validate(const Hypergraph& h, const GeneralizedHypertreeDecomposition& d);
ValidationReport validate(const Hypergraph& h, const FractionalHypertreeDecomposition& d);

enum class WidthMeasure { Tree, Generalized, Fractional };

using Decomposition =
    std::variant<TreeDecomposition, GeneralizedHypertreeDecomposition, FractionalHypertreeDecomposition>;

struct WidthResult {
    Rational value;
    Decomposition witness;
};

inline constexpr std::size_t kDefaultWidthCap = 13;

/// Exact tw, ghw or fhw by dynamic programming over elimination orderings of
/// the primal graph, with the monotone bag cost |B|-1, rho(B) or rho*(B).
/// Throws ResourceLimit above `cap` vertices and InvalidArgument for an empty
/// hypergraph.
WidthResult exact_width(const Hypergraph& h, WidthMeasure measure, std::size_t cap = kDefaultWidthCap);

/// exact_width(h, Fractional) with the witness unpacked.
FractionalHypertreeDecomposition optimal_fractional_decomposition(const Hypergraph& h,
                                                                  std::size_t cap = kDefaultWidthCap);

inline constexpr std::size_t kDefaultSeparatorCap = 16;

/// A weighting of weight <= r whose blocked set leaves no component carrying
/// more than half of gamma's weight. Candidate blocked sets are tried by
/// increasing size (then by mask); the returned weighting is the optimal
/// fractional cover of the first candidate that works.
std::optional<FractionalWeighting> balanced_separator(const Hypergraph& h, const FractionalWeighting& gamma,
                                                      const Rational& r, std::size_t cap = kDefaultSeparatorCap);

/// Recursive separator construction of a fractional hypertree decomposition
/// of width at most 3r+2 (with the special condition). Empty when some
/// balanced-separator step fails, which cannot happen once r >= aw(h).
std::optional<FractionalHypertreeDecomposition> decompose_by_separators(const Hypergraph& h, const Rational& r,
                                                                        std::size_t cap = kDefaultSeparatorCap);

} // namespace fhtw
