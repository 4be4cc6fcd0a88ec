#include "fhtw/hypergraph.hpp"

#include "fhtw/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace fhtw {

Hypergraph::Hypergraph(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& edges) {
    bool infer = vertices.empty();
    names_ = std::move(vertices);
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw InvalidArgument("duplicate vertex: " + names_[i]);
    if (infer)
        for (const auto& e : edges)
            for (const auto& v : e)
                if (index_.emplace(v, static_cast<int>(names_.size())).second)
                    names_.push_back(v);

    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& e : edges) {
        if (e.empty())
            throw InvalidArgument("empty hyperedge");
        VertexSet s(names_.size());
        for (const auto& v : e)
            s.insert(index_of(v));
        if (seen.insert(s).second)
            edges_.push_back(std::move(s));
    }
    finish();
}

Hypergraph Hypergraph::from_sets(std::vector<std::string> names, const std::vector<VertexSet>& edges) {
    Hypergraph h;
    h.names_ = std::move(names);
    for (std::size_t i = 0; i < h.names_.size(); ++i)
        if (!h.index_.emplace(h.names_[i], static_cast<int>(i)).second)
            throw InvalidArgument("duplicate vertex: " + h.names_[i]);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& e : edges) {
        if (e.universe() != h.names_.size())
            throw InvalidArgument("edge universe does not match vertex count");
        if (e.empty())
            throw InvalidArgument("empty hyperedge");
        if (seen.insert(e).second)
            h.edges_.push_back(e);
    }
    h.finish();
    return h;
}

void Hypergraph::finish() {
    incident_.assign(names_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (int v : edges_[i].members())
            incident_[static_cast<std::size_t>(v)].push_back(i);
    for (std::size_t v = 0; v < names_.size(); ++v)
        if (incident_[v].empty())
            throw InvalidArgument("isolated vertex: " + names_[v]);
}

int Hypergraph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownVertex(name);
    return it->second;
}

std::optional<int> Hypergraph::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Hypergraph::find_edge(const VertexSet& e) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i] == e)
            return i;
    return std::nullopt;
}

VertexSet Hypergraph::make_set(const std::vector<std::string>& names) const {
    VertexSet s(num_vertices());
    for (const auto& n : names)
        s.insert(index_of(n));
    return s;
}

std::vector<std::string> Hypergraph::names_of(const VertexSet& s) const {
    std::vector<std::string> out;
    for (int v : s.members())
        out.push_back(names_[static_cast<std::size_t>(v)]);
    return out;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
    if (a.names_ != b.names_ || a.edges_.size() != b.edges_.size())
        return false;
    auto ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end(), lex_less);
    std::sort(eb.begin(), eb.end(), lex_less);
    return ea == eb;
}

InducedSubhypergraph induce(const Hypergraph& h, const VertexSet& x) {
    if (x.empty())
        throw InvalidArgument("induced subhypergraph of an empty vertex set");
    InducedSubhypergraph out;
    out.to_host = x.members();
    std::vector<int> local(h.num_vertices(), -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < out.to_host.size(); ++i) {
        local[static_cast<std::size_t>(out.to_host[i])] = static_cast<int>(i);
        names.push_back(h.name(out.to_host[i]));
    }
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
        VertexSet s(out.to_host.size());
        for (int v : (e & x).members())
            s.insert(local[static_cast<std::size_t>(v)]);
        if (!s.empty())
            edges.push_back(std::move(s));
    }
    out.graph = Hypergraph::from_sets(std::move(names), edges);
    return out;
}

Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& x) { return induce(h, x).graph; }

Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<std::string>& x) {
    return induce(h, h.make_set(x)).graph;
}

Hypergraph primal_graph(const Hypergraph& h) {
    const auto n = h.num_vertices();
    std::vector<VertexSet> neighbours(n, VertexSet(n));
    for (const auto& e : h.edges()) {
        for (int v : e.members()) {
            neighbours[static_cast<std::size_t>(v)] |= e;
        }
    }
    std::vector<VertexSet> edges;
    for (std::size_t v = 0; v < n; ++v) {
        auto& nb = neighbours[v];
        nb.erase(static_cast<int>(v));
        if (nb.empty())
            edges.push_back(VertexSet(n, {static_cast<int>(v)}));
        for (int w : nb.members())
            if (static_cast<std::size_t>(w) > v)
                edges.push_back(VertexSet(n, {static_cast<int>(v), w}));
    }
    return Hypergraph::from_sets(h.names(), edges);
}

namespace {

VertexSet flood(const Hypergraph& h, const VertexSet& allowed, int from) {
    VertexSet seen(h.num_vertices());
    seen.insert(from);
    std::vector<int> stack{from};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto ei : h.incident_edges()[static_cast<std::size_t>(v)]) {
            for (int w : (h.edge(ei) & allowed).members()) {
                if (!seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
    }
    return seen;
}

} // namespace

std::vector<VertexSet> components(const Hypergraph& h, const VertexSet& removed) {
    std::vector<VertexSet> out;
    VertexSet rest = h.all_vertices() - removed;
    while (!rest.empty()) {
        auto comp = flood(h, rest, rest.first());
        rest -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet reachable(const Hypergraph& h, const VertexSet& blocked, int from) {
    if (from < 0 || static_cast<std::size_t>(from) >= h.num_vertices())
        throw UnknownVertex(std::to_string(from));
    if (blocked.contains(from)) {
        VertexSet only(h.num_vertices());
        only.insert(from);
        return only;
    }
    return flood(h, h.all_vertices() - blocked, from);
}

VertexSet reachable(const Hypergraph& h, const VertexSet& blocked, const std::string& from) {
    return reachable(h, blocked, h.index_of(from));
}

bool is_connected(const Hypergraph& h) { return components(h, h.empty_set()).size() <= 1; }

} // namespace fhtw
