#include "fhtw/decomposition.hpp"

#include "fhtw/errors.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace fhtw {

int TreeDecomposition::add_node(VertexSet bag, int parent_node, std::string id) {
    if (id.empty())
        id = "n" + std::to_string(bags.size());
    ids.push_back(std::move(id));
    parent.push_back(parent_node);
    bags.push_back(std::move(bag));
    return static_cast<int>(bags.size()) - 1;
}

int TreeDecomposition::root() const {
    const auto n = static_cast<int>(size());
    if (n == 0)
        throw InvalidArgument("decomposition has no nodes");
    if (parent.size() != bags.size() || ids.size() != bags.size())
        throw InvalidArgument("decomposition arrays have different lengths");
    int root = -1;
    for (int t = 0; t < n; ++t) {
        int p = parent[static_cast<std::size_t>(t)];
        if (p == -1) {
            if (root != -1)
                throw InvalidArgument("decomposition has more than one root");
            root = t;
        } else if (p < 0 || p >= n) {
            throw InvalidArgument("node " + ids[static_cast<std::size_t>(t)] + " has a dangling parent");
        }
    }
    if (root == -1)
        throw InvalidArgument("decomposition has no root");
    for (int t = 0; t < n; ++t) {
        int cur = t;
        for (int steps = 0; cur != -1; ++steps) {
            if (steps > n)
                throw InvalidArgument("decomposition parent links contain a cycle");
            cur = parent[static_cast<std::size_t>(cur)];
        }
    }
    return root;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
    std::vector<std::vector<int>> out(size());
    for (std::size_t t = 0; t < size(); ++t)
        if (parent[t] >= 0)
            out[static_cast<std::size_t>(parent[t])].push_back(static_cast<int>(t));
    return out;
}

std::vector<int> TreeDecomposition::preorder() const {
    auto kids = children();
    std::vector<int> order;
    std::vector<int> stack{root()};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        const auto& c = kids[static_cast<std::size_t>(t)];
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            stack.push_back(*it);
    }
    return order;
}

FractionalHypertreeDecomposition to_fractional(const Hypergraph& h, const GeneralizedHypertreeDecomposition& d) {
    FractionalHypertreeDecomposition out{d.tree, {}};
    for (const auto& guard : d.guards) {
        FractionalWeighting w(h.num_edges());
        for (auto e : guard) {
            if (e >= h.num_edges())
                throw InvalidArgument("guard references an unknown edge");
            w.set(e, Rational(1));
        }
        out.guards.push_back(std::move(w));
    }
    return out;
}

namespace {

std::string describe(const Hypergraph& h, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : h.names_of(s)) {
        if (!first)
            out += ",";
        out += n;
        first = false;
    }
    return out + "}";
}

// Structural checks shared by all three decomposition kinds. Returns false
// when the tree itself is malformed (remaining checks are then skipped).
bool check_tree(const Hypergraph& h, const TreeDecomposition& d, ValidationReport& report) {
    if (d.parent.size() != d.size() || d.ids.size() != d.size())
        throw InvalidArgument("decomposition arrays have different lengths");
    for (const auto& bag : d.bags)
        if (bag.universe() != h.num_vertices())
            throw InvalidArgument("bag references vertices outside the hypergraph");
    for (int p : d.parent)
        if (p < -1 || p >= static_cast<int>(d.size()))
            throw InvalidArgument("parent reference outside the decomposition");
    try {
        d.root();
    } catch (const InvalidArgument& e) {
        report.violations.push_back(std::string("tree: ") + e.what());
        return false;
    }

    for (const auto& e : h.edges()) {
        bool covered = std::any_of(d.bags.begin(), d.bags.end(), [&](const VertexSet& b) { return e.is_subset_of(b); });
        if (!covered)
            report.violations.push_back("edge " + describe(h, e) + ": not contained in any bag");
    }
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        int tops = 0;
        for (std::size_t t = 0; t < d.size(); ++t) {
            if (!d.bags[t].contains(static_cast<int>(v)))
                continue;
            int p = d.parent[t];
            if (p == -1 || !d.bags[static_cast<std::size_t>(p)].contains(static_cast<int>(v)))
                ++tops;
        }
        if (tops > 1)
            report.violations.push_back("vertex " + h.name(static_cast<int>(v)) + ": occurrence set is disconnected");
    }
    return true;
}

// Union of bags over each node's subtree.
std::vector<VertexSet> subtree_unions(const TreeDecomposition& d) {
    auto order = d.preorder();
    std::vector<VertexSet> out = d.bags;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int p = d.parent[static_cast<std::size_t>(*it)];
        if (p >= 0)
            out[static_cast<std::size_t>(p)] |= out[static_cast<std::size_t>(*it)];
    }
    return out;
}

void finish_guarded(const TreeDecomposition& d, const std::vector<VertexSet>& guard_cover,
                    ValidationReport& report) {
    for (std::size_t t = 0; t < d.size(); ++t)
        if (!d.bags[t].is_subset_of(guard_cover[t]))
            report.violations.push_back("node " + d.ids[t] + ": bag is not covered by its guard");
    auto below = subtree_unions(d);
    bool special = true;
    for (std::size_t t = 0; t < d.size(); ++t)
        if (!(guard_cover[t] & below[t]).is_subset_of(d.bags[t]))
            special = false;
    report.special_condition = special;
}

} // namespace

ValidationReport validate(const Hypergraph& h, const TreeDecomposition& d) {
    ValidationReport report;
    if (check_tree(h, d, report)) {
        Rational width = -1;
        for (const auto& b : d.bags)
            width = std::max(width, Rational(static_cast<long>(b.count()) - 1));
        report.width = width;
    }
    report.valid = report.violations.empty();
    return report;
}

ValidationReport validate(const Hypergraph& h, const GeneralizedHypertreeDecomposition& d) {
    if (d.guards.size() != d.tree.size())
        throw InvalidArgument("one guard per node is required");
    std::vector<VertexSet> cover;
    for (const auto& guard : d.guards) {
        VertexSet c = h.empty_set();
        for (auto e : guard) {
            if (e >= h.num_edges())
                throw InvalidArgument("guard references an unknown edge");
            c |= h.edge(e);
        }
        cover.push_back(std::move(c));
    }
    ValidationReport report;
    if (check_tree(h, d.tree, report)) {
        std::size_t width = 0;
        for (const auto& g : d.guards)
            width = std::max(width, g.size());
        report.width = Rational(static_cast<long>(width));
        finish_guarded(d.tree, cover, report);
    }
    report.valid = report.violations.empty();
    return report;
}

ValidationReport validate(const Hypergraph& h, const FractionalHypertreeDecomposition& d) {
    if (d.guards.size() != d.tree.size())
        throw InvalidArgument("one guard per node is required");
    std::vector<VertexSet> cover;
    for (const auto& g : d.guards) {
        if (g.size() != h.num_edges())
            throw InvalidArgument("guard does not match the host's edges");
        cover.push_back(blocked_set(h, g));
    }
    ValidationReport report;
    if (check_tree(h, d.tree, report)) {
        Rational width = 0;
        for (const auto& g : d.guards)
            width = std::max(width, g.weight());
        report.width = width;
        finish_guarded(d.tree, cover, report);
    }
    report.valid = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Exact width over elimination orderings.

namespace {

using Mask = std::uint64_t;

std::vector<Mask> primal_adjacency(const Hypergraph& h) {
    std::vector<Mask> adj(h.num_vertices(), 0);
    for (const auto& e : h.edges()) {
        Mask m = e.mask();
        for (int v : e.members())
            adj[static_cast<std::size_t>(v)] |= m;
    }
    for (std::size_t v = 0; v < adj.size(); ++v)
        adj[v] &= ~(Mask{1} << v);
    return adj;
}

// {v} plus every vertex outside eliminated ∪ {v} reachable from v through
// eliminated vertices: the bag created when v is eliminated after `eliminated`.
Mask elimination_bag(const std::vector<Mask>& adj, Mask eliminated, int v) {
    Mask seen = Mask{1} << v;
    Mask frontier = seen;
    Mask bag = seen;
    while (frontier) {
        int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask next = adj[static_cast<std::size_t>(u)] & ~seen;
        seen |= next;
        bag |= next & ~eliminated;
        frontier |= next & eliminated;
    }
    return bag;
}

class BagCost {
  public:
    BagCost(const Hypergraph& h, WidthMeasure measure) : h_(h), measure_(measure) {}

    const Rational& operator()(Mask bag) {
        auto it = memo_.find(bag);
        if (it != memo_.end())
            return it->second;
        Rational c;
        auto set = VertexSet::from_mask(h_.num_vertices(), bag);
        switch (measure_) {
        case WidthMeasure::Tree:
            c = static_cast<long>(std::popcount(bag)) - 1;
            break;
        case WidthMeasure::Generalized:
            c = static_cast<long>(integral_edge_cover(h_, set).value);
            break;
        case WidthMeasure::Fractional:
            c = cover_value(h_, set);
            break;
        }
        return memo_.emplace(bag, std::move(c)).first->second;
    }

  private:
    const Hypergraph& h_;
    WidthMeasure measure_;
    std::unordered_map<Mask, Rational> memo_;
};

TreeDecomposition decomposition_from_order(const Hypergraph& h, const std::vector<Mask>& adj,
                                           const std::vector<int>& order) {
    const auto n = order.size();
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k)
        position[static_cast<std::size_t>(order[k])] = k;

    std::vector<Mask> bags(n);
    Mask eliminated = 0;
    for (std::size_t k = 0; k < n; ++k) {
        bags[k] = elimination_bag(adj, eliminated, order[k]);
        eliminated |= Mask{1} << order[k];
    }
    std::vector<int> parent(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
        Mask rest = bags[k] & ~(Mask{1} << order[k]);
        std::size_t best = n;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            best = std::min(best, position[static_cast<std::size_t>(u)]);
        }
        if (best < n)
            parent[k] = static_cast<int>(best);
        else if (k + 1 < n)
            parent[k] = static_cast<int>(n - 1); // separate component: hang it under the last bag
    }
    // Emit with the root first so node ids read top-down.
    TreeDecomposition td;
    std::vector<int> new_index(n, -1);
    std::vector<std::size_t> emit;
    std::function<void(std::size_t)> visit = [&](std::size_t k) {
        emit.push_back(k);
        for (std::size_t c = n; c-- > 0;)
            if (parent[c] == static_cast<int>(k))
                visit(c);
    };
    visit(n - 1);
    for (auto k : emit) {
        int p = parent[k] < 0 ? -1 : new_index[static_cast<std::size_t>(parent[k])];
        new_index[k] = td.add_node(VertexSet::from_mask(h.num_vertices(), bags[k]), p);
    }
    return td;
}

} // namespace

WidthResult exact_width(const Hypergraph& h, WidthMeasure measure, std::size_t cap) {
    const auto n = h.num_vertices();
    if (n == 0)
        throw InvalidArgument("width of an empty hypergraph");
    if (n > cap || n > 24)
        throw ResourceLimit("exact width search is limited to " + std::to_string(std::min<std::size_t>(cap, 24)) +
                            " vertices");

    auto adj = primal_adjacency(h);
    BagCost cost(h, measure);
    const Mask full = (Mask{1} << n) - 1;

    // best[S]: least achievable max bag cost when exactly S is eliminated first.
    std::vector<std::optional<Rational>> best(std::size_t{1} << n);
    std::vector<signed char> last(std::size_t{1} << n, -1);
    for (Mask s = 1; s <= full; ++s) {
        Mask rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            Mask prev = s & ~(Mask{1} << v);
            const auto& before = best[prev];
            if (before && best[s] && *before >= *best[s])
                continue;
            const Rational& c = cost(elimination_bag(adj, prev, v));
            Rational value = before ? std::max(*before, c) : c;
            if (!best[s] || value < *best[s]) {
                best[s] = value;
                last[s] = static_cast<signed char>(v);
            }
        }
    }

    std::vector<int> order;
    for (Mask s = full; s; s &= ~(Mask{1} << last[s]))
        order.push_back(last[s]);
    std::reverse(order.begin(), order.end());
    auto td = decomposition_from_order(h, adj, order);

    WidthResult result{*best[full], {}};
    switch (measure) {
    case WidthMeasure::Tree:
        result.witness = std::move(td);
        break;
    case WidthMeasure::Generalized: {
        GeneralizedHypertreeDecomposition d{std::move(td), {}};
        for (const auto& bag : d.tree.bags)
            d.guards.push_back(integral_edge_cover(h, bag).edges);
        result.witness = std::move(d);
        break;
    }
    case WidthMeasure::Fractional: {
        FractionalHypertreeDecomposition d{std::move(td), {}};
        for (const auto& bag : d.tree.bags)
            d.guards.push_back(fractional_edge_cover(h, bag).cover);
        result.witness = std::move(d);
        break;
    }
    }
    return result;
}

FractionalHypertreeDecomposition optimal_fractional_decomposition(const Hypergraph& h, std::size_t cap) {
    return std::get<FractionalHypertreeDecomposition>(exact_width(h, WidthMeasure::Fractional, cap).witness);
}

// ---------------------------------------------------------------------------
// Balanced separators and the separator construction.

namespace {

void check_separator_cap(const Hypergraph& h, std::size_t cap) {
    if (h.num_vertices() > cap || h.num_vertices() > 62)
        throw ResourceLimit("separator search is limited to " + std::to_string(std::min<std::size_t>(cap, 62)) +
                            " vertices");
}

bool is_balanced(const Hypergraph& h, const FractionalWeighting& gamma, const VertexSet& blocked,
                 const Rational& half) {
    for (const auto& comp : components(h, blocked))
        if (restricted_weight(h, gamma, comp) > half)
            return false;
    return true;
}

std::optional<FractionalWeighting> find_separator(const Hypergraph& h, const FractionalWeighting& gamma,
                                                  const Rational& r) {
    const auto n = h.num_vertices();
    const Rational half = gamma.weight() / 2;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 0) {
            if (is_balanced(h, gamma, h.empty_set(), half))
                return FractionalWeighting::zero(h);
            continue;
        }
        // Gosper's hack: all k-subsets in increasing mask order.
        Mask s = (Mask{1} << k) - 1;
        const Mask limit = Mask{1} << n;
        while (s < limit) {
            auto set = VertexSet::from_mask(n, s);
            if (is_balanced(h, gamma, set, half)) {
                auto cover = fractional_edge_cover(h, set);
                if (cover.value <= r)
                    return std::move(cover.cover);
            }
            Mask c = s & (~s + 1);
            Mask rr = s + c;
            s = (((rr ^ s) >> 2) / c) | rr;
        }
    }
    return std::nullopt;
}

std::optional<FractionalHypertreeDecomposition> build(const Hypergraph& h, const FractionalWeighting& gamma,
                                                      const Rational& r) {
    auto sigma = find_separator(h, gamma, r);
    if (!sigma)
        return std::nullopt;
    const FractionalWeighting chi = gamma + *sigma;
    const VertexSet chi_blocked = blocked_set(h, chi);

    FractionalHypertreeDecomposition out;
    out.tree.add_node(chi_blocked, -1);
    out.guards.push_back(chi);
    if (chi_blocked == h.all_vertices())
        return out;

    const VertexSet sigma_blocked = blocked_set(h, *sigma);
    const auto measure = (h.all_vertices() - blocked_set(h, gamma)).count();

    for (const auto& region : components(h, chi_blocked)) {
        std::optional<std::size_t> anchor;
        for (std::size_t e = 0; e < h.num_edges(); ++e)
            if (h.edge(e).intersects(region) && (!anchor || lex_less(h.edge(e), h.edge(*anchor))))
                anchor = e;
        const VertexSet side = reachable(h, sigma_blocked, region.first());

        FractionalWeighting chi_i(h.num_edges());
        for (std::size_t e = 0; e < h.num_edges(); ++e) {
            if (e == *anchor)
                chi_i.set(e, Rational(1));
            else if (h.edge(e).intersects(side))
                chi_i.set(e, (*sigma)[e] + gamma[e]);
            else
                chi_i.set(e, (*sigma)[e]);
        }
        const auto sub = induce(h, region | blocked_set(h, chi_i));
        const auto chi_sub = restrict_weighting(h, chi_i, sub);
        const auto sub_measure = (sub.graph.all_vertices() - blocked_set(sub.graph, chi_sub)).count();
        if (sub_measure >= measure)
            throw InternalError("separator recursion failed to shrink the unblocked part");

        auto child = build(sub.graph, chi_sub, r);
        if (!child)
            return std::nullopt;

        // Splice the child decomposition in, mapping bags and guards to h.
        std::vector<int> index(child->tree.size(), -1);
        for (int t : child->tree.preorder()) {
            VertexSet bag = h.empty_set();
            for (int v : child->tree.bags[static_cast<std::size_t>(t)].members())
                bag.insert(sub.to_host[static_cast<std::size_t>(v)]);
            int p = child->tree.parent[static_cast<std::size_t>(t)];
            index[static_cast<std::size_t>(t)] = out.tree.add_node(std::move(bag), p < 0 ? 0 : index[static_cast<std::size_t>(p)]);
            out.guards.push_back(extend_weighting(h, child->guards[static_cast<std::size_t>(t)], sub));
        }
    }
    return out;
}

} // namespace

std::optional<FractionalWeighting> balanced_separator(const Hypergraph& h, const FractionalWeighting& gamma,
                                                      const Rational& r, std::size_t cap) {
    if (sgn(r) < 0)
        throw InvalidArgument("negative separator budget");
    if (gamma.size() != h.num_edges())
        throw InvalidArgument("weighting does not match the host's edges");
    check_separator_cap(h, cap);
    return find_separator(h, gamma, r);
}

std::optional<FractionalHypertreeDecomposition> decompose_by_separators(const Hypergraph& h, const Rational& r,
                                                                        std::size_t cap) {
    if (sgn(r) < 0)
        throw InvalidArgument("negative separator budget");
    check_separator_cap(h, cap);
    if (h.num_vertices() == 0)
        throw InvalidArgument("decomposition of an empty hypergraph");
    return build(h, FractionalWeighting::zero(h), r);
}

} // namespace fhtw
