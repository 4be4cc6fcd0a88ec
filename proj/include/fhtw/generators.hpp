#pragma once

#include "fhtw/csp.hpp"
#include "fhtw/hypergraph.hpp"

#include <cstdint>

namespace fhtw {

inline constexpr std::uint64_t kDefaultTightDomainCap = 1'000'000;

/// Instance on h with every relation of size at most N = n0^q and exactly
/// N^{rho*(h)} solutions, where y = p/q is the LP's optimal fractional
/// independent set. Domain values are "1".."N"; the relation of an edge is the
/// product of the ranges [n0^{p_v}] over its vertices.
CspInstance generate_tight(const Hypergraph& h, std::uint64_t n0, std::uint64_t domain_cap = kDefaultTightDomainCap);

/// Common denominator q and numerators p_v used by generate_tight.
struct TightExponents {
    std::uint64_t denominator = 1;
    std::vector<std::uint64_t> numerators;
};
TightExponents tight_exponents(const Hypergraph& h);

inline constexpr int kMaxHn = 4;

/// Vertices v_S for the n-subsets S of {1..2n}; edge e_i holds the v_S with i in S.
Hypergraph generate_hn(int n);

/// k disjoint two-vertex edges.
Hypergraph generate_matching(int k);

/// n vertices and the single edge containing all of them.
Hypergraph generate_universal(int n);

/// Path a_1 - ... - a_n with n-1 binary edges (a single vertex keeps a singleton edge).
Hypergraph generate_path(int n);

/// Cycle on n >= 3 vertices; n = 3 is the triangle.
Hypergraph generate_cycle(int n);

/// Seeded random instance; each possible tuple is kept independently with
/// probability tuple_density. Deterministic in its arguments.
CspInstance generate_random(std::uint64_t seed, int num_vars, int domain_size, int num_constraints, int max_arity,
                            double tuple_density);

/// Seeded random hypergraph with up to num_edges edges of size 1..max_edge_size;
/// vertices left uncovered get a random partner edge.
Hypergraph generate_random_hypergraph(std::uint64_t seed, int num_vertices, int num_edges, int max_edge_size);

} // namespace fhtw
