#pragma once

#include "fhtw/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fhtw {

using Tuple = std::vector<int>;

/// Explicit relation over interned domain values. Tuples are kept sorted and
/// duplicate-free.
class Relation {
  public:
    Relation() = default;
    Relation(std::size_t arity, std::vector<Tuple> tuples);

    std::size_t arity() const { return arity_; }
    std::size_t size() const { return tuples_.size(); }
    bool empty() const { return tuples_.empty(); }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    bool contains(const Tuple& t) const;

    friend bool operator==(const Relation&, const Relation&) = default;

  private:
    std::size_t arity_ = 0;
    std::vector<Tuple> tuples_;
};

/// Scope may repeat variables; relation arity equals scope length.
struct Constraint {
    std::vector<int> scope;
    Relation relation;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Value per variable, kUnassigned for variables outside the domain of a
/// partial assignment.
using Assignment = std::vector<int>;
inline constexpr int kUnassigned = -1;

/// CSP instance (V, D, C) with explicit tuple-list constraints.
class CspInstance {
  public:
    CspInstance() = default;
    /// Throws InvalidArgument when a scope names an unknown variable, a tuple
    /// uses a value outside the domain, an arity mismatches, or a variable is
    /// in no scope.
    CspInstance(std::vector<std::string> variables, std::vector<std::string> domain,
                std::vector<Constraint> constraints);

    /// Name-level builder input.
    struct NamedConstraint {
        std::vector<std::string> scope;
        std::vector<std::vector<std::string>> tuples;
    };
    static CspInstance from_names(std::vector<std::string> variables, std::vector<std::string> domain,
                                  const std::vector<NamedConstraint>& constraints);

    std::size_t num_variables() const { return variables_.size(); }
    std::size_t domain_size() const { return domain_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<std::string>& domain() const { return domain_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    int variable_index(const std::string& name) const;
    int value_index(const std::string& name) const;

    /// Largest relation size N.
    std::size_t max_relation_size() const;

    /// Variable-name -> value-name view of a (possibly partial) assignment.
    std::map<std::string, std::string> describe(const Assignment& a) const;

    friend bool operator==(const CspInstance&, const CspInstance&) = default;

  private:
    std::vector<std::string> variables_;
    std::vector<std::string> domain_;
    std::vector<Constraint> constraints_;
};

/// Two finite structures over a shared signature.
struct RelationalStructure {
    std::vector<std::string> universe;
    std::map<std::string, std::vector<std::vector<std::string>>> relations;
};

/// ||I|| = |V| + |D| + sum over constraints of (k + k|R|).
std::uint64_t instance_size(const CspInstance& i);

/// One hyperedge per constraint scope (as a set).
Hypergraph hypergraph_of(const CspInstance& i);

/// Projection onto 0-based, strictly increasing positions.
Relation project_relation(const Relation& r, const std::vector<std::size_t>& positions);

/// I[sub]: constraints meeting sub, restricted to their in-sub positions.
/// Variables of the result follow the instance order.
CspInstance induced_instance(const CspInstance& i, const std::vector<int>& sub);

/// Requires a total assignment; throws InvalidArgument otherwise.
bool is_solution(const CspInstance& i, const Assignment& a);

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

/// Exhaustive enumeration of all total assignments, in lexicographic order of
/// the variable order. Throws ResourceLimit when |D|^|V| exceeds `cap`.
std::vector<Assignment> brute_force_solutions(const CspInstance& i, std::uint64_t cap = kDefaultBruteForceCap);

/// Instance whose solutions are exactly the homomorphisms a -> b.
CspInstance structures_to_csp(const RelationalStructure& a, const RelationalStructure& b);

} // namespace fhtw
