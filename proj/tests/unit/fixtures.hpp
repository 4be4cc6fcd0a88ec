#pragma once

#include "fhtw/csp.hpp"
#include "fhtw/decomposition.hpp"
#include "fhtw/generators.hpp"
#include "fhtw/hypergraph.hpp"

#include <string>
#include <vector>

namespace fx {

using namespace fhtw;

inline Hypergraph single_edge() { return Hypergraph({}, {{"a", "b"}}); }
inline Hypergraph path_abc() { return Hypergraph({}, {{"a", "b"}, {"b", "c"}}); }
inline Hypergraph triangle() { return Hypergraph({}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

inline Rational q(const char* s) { return parse_rational(s); }

/// The two-node decomposition of H_2: bag i holds v_S with S meeting S_i,
/// guarded by the edges indexed by S_i.
inline GeneralizedHypertreeDecomposition h2_two_node(const Hypergraph& h2) {
    GeneralizedHypertreeDecomposition d;
    VertexSet b1 = h2.all_vertices(), b2 = h2.all_vertices();
    b1.erase(h2.index_of("v{3,4}"));
    b2.erase(h2.index_of("v{1,2}"));
    int t1 = d.tree.add_node(b1, -1, "t1");
    d.tree.add_node(b2, t1, "t2");
    d.guards = {{0, 1}, {2, 3}};
    return d;
}

/// Single bag over V(h) guarded by the given weighting.
inline FractionalHypertreeDecomposition single_bag(const Hypergraph& h, FractionalWeighting guard) {
    FractionalHypertreeDecomposition d;
    d.tree.add_node(h.all_vertices(), -1, "root");
    d.guards.push_back(std::move(guard));
    return d;
}

/// Named corpus used by several suites.
inline std::vector<std::pair<std::string, Hypergraph>> corpus() {
    return {
        {"single-edge", single_edge()},
        {"path3", generate_path(3)},
        {"path5", generate_path(5)},
        {"triangle", triangle()},
        {"cycle4", generate_cycle(4)},
        {"H2", generate_hn(2)},
        {"matching2", generate_matching(2)},
        {"matching3", generate_matching(3)},
        {"universal4", generate_universal(4)},
    };
}

} // namespace fx
