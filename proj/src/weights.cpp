#include "fhtw/weights.hpp"

#include "fhtw/errors.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace fhtw {

FractionalWeighting::FractionalWeighting(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (const auto& w : weights_)
        if (sgn(w) < 0)
            throw InvalidArgument("negative edge weight");
}

void FractionalWeighting::set(std::size_t e, Rational w) {
    if (sgn(w) < 0)
        throw InvalidArgument("negative edge weight");
    weights_.at(e) = std::move(w);
}

Rational FractionalWeighting::weight() const {
    Rational total = 0;
    for (const auto& w : weights_)
        total += w;
    return total;
}

FractionalWeighting& FractionalWeighting::operator+=(const FractionalWeighting& o) {
    if (o.size() != size())
        throw InvalidArgument("adding weightings over different edge sets");
    for (std::size_t e = 0; e < size(); ++e)
        weights_[e] += o.weights_[e];
    return *this;
}

namespace {

void check_host(const Hypergraph& h, const FractionalWeighting& gamma) {
    if (gamma.size() != h.num_edges())
        throw InvalidArgument("weighting does not match the host's edges");
}

// Trace of a host edge on the subhypergraph, in sub-local indices.
VertexSet trace(const VertexSet& host_edge, const InducedSubhypergraph& sub) {
    VertexSet t(sub.to_host.size());
    for (std::size_t i = 0; i < sub.to_host.size(); ++i)
        if (host_edge.contains(sub.to_host[i]))
            t.insert(static_cast<int>(i));
    return t;
}

InducedSubhypergraph match_by_name(const Hypergraph& host, const Hypergraph& sub) {
    InducedSubhypergraph m;
    m.graph = sub;
    for (const auto& n : sub.names()) {
        auto v = host.find(n);
        if (!v)
            throw InvalidArgument("subhypergraph vertex not in host: " + n);
        if (!m.to_host.empty() && *v <= m.to_host.back())
            throw InvalidArgument("subhypergraph vertex order differs from host order");
        m.to_host.push_back(*v);
    }
    std::vector<VertexSet> traces;
    for (const auto& e : host.edges()) {
        auto t = trace(e, m);
        if (!t.empty() && std::find(traces.begin(), traces.end(), t) == traces.end())
            traces.push_back(std::move(t));
    }
    if (traces.size() != sub.num_edges())
        throw InvalidArgument("not an induced subhypergraph of the host");
    for (const auto& e : sub.edges())
        if (std::find(traces.begin(), traces.end(), e) == traces.end())
            throw InvalidArgument("not an induced subhypergraph of the host");
    return m;
}

} // namespace

VertexSet blocked_set(const Hypergraph& h, const FractionalWeighting& gamma) {
    check_host(h, gamma);
    VertexSet out(h.num_vertices());
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        Rational sum = 0;
        for (auto e : h.incident_edges()[v])
            sum += gamma[e];
        if (sum >= 1)
            out.insert(static_cast<int>(v));
    }
    return out;
}

Rational restricted_weight(const Hypergraph& h, const FractionalWeighting& gamma, const VertexSet& w) {
    check_host(h, gamma);
    Rational total = 0;
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        if (h.edge(e).intersects(w))
            total += gamma[e];
    return total;
}

FractionalWeighting restrict_weighting(const Hypergraph& host, const FractionalWeighting& gamma,
                                       const InducedSubhypergraph& sub) {
    check_host(host, gamma);
    FractionalWeighting out(sub.graph.num_edges());
    for (std::size_t e = 0; e < host.num_edges(); ++e) {
        if (sgn(gamma[e]) == 0)
            continue;
        auto t = trace(host.edge(e), sub);
        if (t.empty())
            continue;
        auto idx = sub.graph.find_edge(t);
        if (!idx)
            throw InvalidArgument("not an induced subhypergraph of the host");
        out.add(*idx, gamma[e]);
    }
    return out;
}

FractionalWeighting extend_weighting(const Hypergraph& host, const FractionalWeighting& gamma_sub,
                                     const InducedSubhypergraph& sub) {
    check_host(sub.graph, gamma_sub);
    std::vector<std::optional<std::size_t>> image(host.num_edges());
    std::vector<std::size_t> preimages(sub.graph.num_edges(), 0);
    for (std::size_t e = 0; e < host.num_edges(); ++e) {
        auto t = trace(host.edge(e), sub);
        if (t.empty())
            continue;
        image[e] = sub.graph.find_edge(t);
        if (!image[e])
            throw InvalidArgument("not an induced subhypergraph of the host");
        ++preimages[*image[e]];
    }
    FractionalWeighting out(host.num_edges());
    for (std::size_t e = 0; e < host.num_edges(); ++e)
        if (image[e])
            out.set(e, gamma_sub[*image[e]] / Rational(static_cast<long>(preimages[*image[e]])));
    return out;
}

FractionalWeighting restrict_weighting(const Hypergraph& host, const FractionalWeighting& gamma, const Hypergraph& sub) {
    return restrict_weighting(host, gamma, match_by_name(host, sub));
}

FractionalWeighting extend_weighting(const Hypergraph& host, const FractionalWeighting& gamma_sub,
                                     const Hypergraph& sub) {
    return extend_weighting(host, gamma_sub, match_by_name(host, sub));
}

namespace {

// Packing rows: for each edge, the target positions it contains.
std::vector<std::vector<std::size_t>> packing_rows(const Hypergraph& h, const std::vector<int>& columns) {
    std::vector<int> column_of(h.num_vertices(), -1);
    for (std::size_t j = 0; j < columns.size(); ++j)
        column_of[static_cast<std::size_t>(columns[j])] = static_cast<int>(j);
    std::vector<std::vector<std::size_t>> rows(h.num_edges());
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        for (int v : h.edge(e).members())
            if (column_of[static_cast<std::size_t>(v)] >= 0)
                rows[e].push_back(static_cast<std::size_t>(column_of[static_cast<std::size_t>(v)]));
    return rows;
}

void check_target(const Hypergraph& h, const VertexSet& target) {
    if (target.universe() != h.num_vertices())
        throw InvalidArgument("target set does not belong to this hypergraph");
}

} // namespace

EdgeCover fractional_edge_cover(const Hypergraph& h, const VertexSet& target) {
    check_target(h, target);
    if (target.empty())
        throw InvalidArgument("fractional edge cover of an empty target");
    auto columns = target.members();
    auto sol = detail::solve_packing(packing_rows(h, columns), columns.size());
    return {sol.value, FractionalWeighting(std::move(sol.dual))};
}

Rational cover_value(const Hypergraph& h, const VertexSet& target) {
    check_target(h, target);
    if (target.empty())
        return Rational(0);
    auto columns = target.members();
    return detail::solve_packing(packing_rows(h, columns), columns.size()).value;
}

IndependentSet fractional_independent_set(const Hypergraph& h) {
    std::vector<int> columns(h.num_vertices());
    for (std::size_t v = 0; v < columns.size(); ++v)
        columns[v] = static_cast<int>(v);
    auto sol = detail::solve_packing(packing_rows(h, columns), columns.size());
    return {sol.value, std::move(sol.primal)};
}

IntegralCover integral_edge_cover(const Hypergraph& h, const VertexSet& target) {
    check_target(h, target);
    if (target.empty())
        throw InvalidArgument("edge cover of an empty target");

    // Branch on the edges containing the smallest uncovered target vertex.
    IntegralCover best;
    best.value = h.num_edges() + 1;
    std::vector<std::size_t> chosen;
    std::function<void(const VertexSet&)> search = [&](const VertexSet& uncovered) {
        if (uncovered.empty()) {
            if (chosen.size() < best.value) {
                best.value = chosen.size();
                best.edges = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best.value)
            return;
        int v = uncovered.first();
        for (auto e : h.incident_edges()[static_cast<std::size_t>(v)]) {
            chosen.push_back(e);
            search(uncovered - h.edge(e));
            chosen.pop_back();
        }
    };
    search(target);
    std::sort(best.edges.begin(), best.edges.end());
    return best;
}

} // namespace fhtw
