#pragma once

#include "fhtw/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fhtw {

/// Finite hypergraph with named vertices interned to dense indices.
///
/// Invariants enforced at construction: every edge is nonempty, every vertex
/// lies in some edge, and duplicate edges are merged (first occurrence wins
/// the position in the edge order).
class Hypergraph {
  public:
    Hypergraph() = default;

    /// Build from names. When `vertices` is empty the vertex list is inferred
    /// from the edges in order of first appearance.
    Hypergraph(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& edges);

    /// Build over vertices named by `names`, with edges given as index sets.
    static Hypergraph from_sets(std::vector<std::string> names, const std::vector<VertexSet>& edges);

    std::size_t num_vertices() const { return names_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(std::size_t i) const { return edges_[i]; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a named vertex; throws UnknownVertex.
    int index_of(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;

    /// Index of an edge equal to `e`, if present.
    std::optional<std::size_t> find_edge(const VertexSet& e) const;

    VertexSet empty_set() const { return VertexSet(num_vertices()); }
    VertexSet all_vertices() const { return VertexSet::full(num_vertices()); }
    VertexSet make_set(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(const VertexSet& s) const;

    /// Edges incident to each vertex.
    const std::vector<std::vector<std::size_t>>& incident_edges() const { return incident_; }

    /// Same vertex list and the same edge *set* (edge order ignored).
    friend bool operator==(const Hypergraph& a, const Hypergraph& b);

  private:
    void finish();

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<VertexSet> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Induced subhypergraph together with the host index of each of its vertices.
struct InducedSubhypergraph {
    Hypergraph graph;
    std::vector<int> to_host;
};

/// H[x]: vertex set x (host order), edges { e ∩ x : e ∩ x nonempty } merged.
/// Throws InvalidArgument on empty x.
Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& x);
InducedSubhypergraph induce(const Hypergraph& h, const VertexSet& x);

/// Name-based overload; throws UnknownVertex for names not in h.
Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<std::string>& x);

/// Graph on V(h) with an edge {v,w} for every pair sharing a hyperedge; vertices
/// whose only edges are singletons keep a singleton edge.
Hypergraph primal_graph(const Hypergraph& h);

/// Connected components of h minus `removed`, ordered by smallest vertex.
std::vector<VertexSet> components(const Hypergraph& h, const VertexSet& removed);

/// Vertices reachable from `from` in h minus `blocked`, always including `from`.
VertexSet reachable(const Hypergraph& h, const VertexSet& blocked, int from);

/// Name-based overload; throws UnknownVertex.
VertexSet reachable(const Hypergraph& h, const VertexSet& blocked, const std::string& from);

/// True when h minus nothing has at most one component.
bool is_connected(const Hypergraph& h);

} // namespace fhtw
