#include "fhtw/io.hpp"

#include "fhtw/errors.hpp"

#include <unordered_map>

namespace fhtw {

namespace {

std::vector<std::string> strings(const Json& j, const char* what) {
    if (!j.is_array())
        throw InvalidArgument(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw InvalidArgument(std::string(what) + " must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw InvalidArgument(std::string("missing field: ") + name);
    return j.at(name);
}

} // namespace

Json to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const auto& e : h.edges())
        edges.push_back(h.names_of(e));
    return Json{{"vertices", h.names()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    std::vector<std::string> vertices;
    if (j.is_object() && j.contains("vertices"))
        vertices = strings(j.at("vertices"), "vertices");
    std::vector<std::vector<std::string>> edges;
    const auto& je = field(j, "edges");
    if (!je.is_array())
        throw InvalidArgument("edges must be an array");
    for (const auto& e : je)
        edges.push_back(strings(e, "edge"));
    return Hypergraph(std::move(vertices), edges);
}

Json to_json(const CspInstance& i) {
    Json constraints = Json::array();
    for (const auto& c : i.constraints()) {
        Json scope = Json::array();
        for (int v : c.scope)
            scope.push_back(i.variables()[static_cast<std::size_t>(v)]);
        Json tuples = Json::array();
        for (const auto& t : c.relation.tuples()) {
            Json tj = Json::array();
            for (int d : t)
                tj.push_back(i.domain()[static_cast<std::size_t>(d)]);
            tuples.push_back(std::move(tj));
        }
        constraints.push_back(Json{{"scope", std::move(scope)}, {"tuples", std::move(tuples)}});
    }
    return Json{{"variables", i.variables()}, {"domain", i.domain()}, {"constraints", std::move(constraints)}};
}

CspInstance instance_from_json(const Json& j) {
    auto variables = strings(field(j, "variables"), "variables");
    auto domain = strings(field(j, "domain"), "domain");
    const auto& jc = field(j, "constraints");
    if (!jc.is_array())
        throw InvalidArgument("constraints must be an array");
    std::vector<CspInstance::NamedConstraint> cs;
    for (const auto& c : jc) {
        CspInstance::NamedConstraint nc;
        nc.scope = strings(field(c, "scope"), "scope");
        const auto& jt = field(c, "tuples");
        if (!jt.is_array())
            throw InvalidArgument("tuples must be an array");
        for (const auto& t : jt)
            nc.tuples.push_back(strings(t, "tuple"));
        cs.push_back(std::move(nc));
    }
    return CspInstance::from_names(std::move(variables), std::move(domain), cs);
}

Json weighting_to_json(const Hypergraph& h, const FractionalWeighting& w) {
    Json out = Json::array();
    for (std::size_t e = 0; e < w.size(); ++e)
        if (sgn(w[e]) != 0)
            out.push_back(Json{{"edge", h.names_of(h.edge(e))}, {"weight", to_string(w[e])}});
    return out;
}

FractionalWeighting weighting_from_json(const Hypergraph& h, const Json& j) {
    if (!j.is_array())
        throw InvalidArgument("guard must be an array");
    FractionalWeighting w(h.num_edges());
    for (const auto& entry : j) {
        auto edge = h.make_set(strings(field(entry, "edge"), "edge"));
        auto idx = h.find_edge(edge);
        if (!idx)
            throw InvalidArgument("guard references an edge not in the hypergraph");
        const auto& jw = field(entry, "weight");
        if (!jw.is_string())
            throw InvalidArgument("weights must be \"p/q\" strings");
        auto value = parse_rational(jw.get<std::string>());
        if (sgn(value) < 0)
            throw InvalidArgument("negative guard weight");
        w.add(*idx, value);
    }
    return w;
}

namespace {

template <typename GuardFn>
Json nodes_json(const Hypergraph& h, const TreeDecomposition& d, GuardFn guard) {
    Json nodes = Json::array();
    for (int t : d.preorder()) {
        const auto tu = static_cast<std::size_t>(t);
        Json parent = d.parent[tu] < 0 ? Json(nullptr) : Json(d.ids[static_cast<std::size_t>(d.parent[tu])]);
        nodes.push_back(Json{{"id", d.ids[tu]}, {"parent", std::move(parent)}, {"bag", h.names_of(d.bags[tu])},
                             {"guard", guard(tu)}});
    }
    return Json{{"nodes", std::move(nodes)}};
}

} // namespace

Json to_json(const Hypergraph& h, const TreeDecomposition& d) {
    return nodes_json(h, d, [](std::size_t) { return Json::array(); });
}

Json to_json(const Hypergraph& h, const GeneralizedHypertreeDecomposition& d) {
    return nodes_json(h, d.tree, [&](std::size_t t) {
        Json g = Json::array();
        for (auto e : d.guards[t])
            g.push_back(Json{{"edge", h.names_of(h.edge(e))}, {"weight", "1/1"}});
        return g;
    });
}

Json to_json(const Hypergraph& h, const FractionalHypertreeDecomposition& d) {
    return nodes_json(h, d.tree, [&](std::size_t t) { return weighting_to_json(h, d.guards[t]); });
}

Json to_json(const Hypergraph& h, const Decomposition& d) {
    return std::visit([&](const auto& x) { return to_json(h, x); }, d);
}

FractionalHypertreeDecomposition decomposition_from_json(const Hypergraph& h, const Json& j) {
    const auto& nodes = field(j, "nodes");
    if (!nodes.is_array())
        throw InvalidArgument("nodes must be an array");
    FractionalHypertreeDecomposition d;
    std::unordered_map<std::string, int> index;
    for (const auto& node : nodes) {
        const auto& id = field(node, "id");
        if (!id.is_string())
            throw InvalidArgument("node id must be a string");
        if (!index.emplace(id.get<std::string>(), static_cast<int>(index.size())).second)
            throw InvalidArgument("duplicate node id: " + id.get<std::string>());
    }
    for (const auto& node : nodes) {
        int parent = -1;
        if (node.contains("parent") && !node.at("parent").is_null()) {
            const auto& p = node.at("parent");
            if (!p.is_string() || !index.contains(p.get<std::string>()))
                throw InvalidArgument("node parent does not name a node");
            parent = index.at(p.get<std::string>());
        }
        d.tree.add_node(h.make_set(strings(field(node, "bag"), "bag")), parent, node.at("id").get<std::string>());
        d.guards.push_back(node.contains("guard") ? weighting_from_json(h, node.at("guard"))
                                                  : FractionalWeighting(h.num_edges()));
    }
    return d;
}

Json to_json(const ValidationReport& r) {
    Json out{{"valid", r.valid}, {"width", to_string(r.width)},
             {"violations", r.violations}};
    if (r.special_condition)
        out["special_condition"] = *r.special_condition;
    return out;
}

Json assignment_to_json(const CspInstance& i, const Assignment& a) {
    Json out = Json::object();
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] != kUnassigned)
            out[i.variables()[v]] = i.domain()[static_cast<std::size_t>(a[v])];
    return out;
}

} // namespace fhtw
