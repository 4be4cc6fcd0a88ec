#include "fhtw/csp.hpp"

#include "fhtw/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace fhtw {

Relation::Relation(std::size_t arity, std::vector<Tuple> tuples) : arity_(arity), tuples_(std::move(tuples)) {
    if (arity_ == 0)
        throw InvalidArgument("relation arity must be positive");
    for (const auto& t : tuples_)
        if (t.size() != arity_)
            throw InvalidArgument("tuple length does not match relation arity");
    std::sort(tuples_.begin(), tuples_.end());
    tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool Relation::contains(const Tuple& t) const { return std::binary_search(tuples_.begin(), tuples_.end(), t); }

CspInstance::CspInstance(std::vector<std::string> variables, std::vector<std::string> domain,
                         std::vector<Constraint> constraints)
    : variables_(std::move(variables)), domain_(std::move(domain)), constraints_(std::move(constraints)) {
    const auto nv = static_cast<int>(variables_.size());
    const auto nd = static_cast<int>(domain_.size());
    {
        auto v = variables_;
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw InvalidArgument("duplicate variable name");
        auto d = domain_;
        std::sort(d.begin(), d.end());
        if (std::adjacent_find(d.begin(), d.end()) != d.end())
            throw InvalidArgument("duplicate domain value");
    }
    std::vector<bool> used(variables_.size(), false);
    for (const auto& c : constraints_) {
        if (c.scope.empty())
            throw InvalidArgument("constraint with empty scope");
        if (c.relation.arity() != c.scope.size())
            throw InvalidArgument("relation arity does not match scope length");
        for (int v : c.scope) {
            if (v < 0 || v >= nv)
                throw InvalidArgument("scope references an unknown variable");
            used[static_cast<std::size_t>(v)] = true;
        }
        for (const auto& t : c.relation.tuples())
            for (int d : t)
                if (d < 0 || d >= nd)
                    throw InvalidArgument("tuple value outside the domain");
    }
    for (std::size_t v = 0; v < used.size(); ++v)
        if (!used[v])
            throw InvalidArgument("variable in no constraint: " + variables_[v]);
}

CspInstance CspInstance::from_names(std::vector<std::string> variables, std::vector<std::string> domain,
                                    const std::vector<NamedConstraint>& constraints) {
    std::unordered_map<std::string, int> var_index, value_index;
    for (std::size_t k = 0; k < variables.size(); ++k)
        var_index.emplace(variables[k], static_cast<int>(k));
    for (std::size_t k = 0; k < domain.size(); ++k)
        value_index.emplace(domain[k], static_cast<int>(k));

    std::vector<Constraint> cs;
    for (const auto& nc : constraints) {
        Constraint c;
        for (const auto& v : nc.scope) {
            auto it = var_index.find(v);
            if (it == var_index.end())
                throw UnknownVertex(v);
            c.scope.push_back(it->second);
        }
        std::vector<Tuple> tuples;
        for (const auto& t : nc.tuples) {
            Tuple tt;
            for (const auto& d : t) {
                auto it = value_index.find(d);
                if (it == value_index.end())
                    throw InvalidArgument("tuple value outside the domain: " + d);
                tt.push_back(it->second);
            }
            tuples.push_back(std::move(tt));
        }
        c.relation = Relation(nc.scope.size(), std::move(tuples));
        cs.push_back(std::move(c));
    }
    return CspInstance(std::move(variables), std::move(domain), std::move(cs));
}

int CspInstance::variable_index(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end())
        throw UnknownVertex(name);
    return static_cast<int>(it - variables_.begin());
}

int CspInstance::value_index(const std::string& name) const {
    auto it = std::find(domain_.begin(), domain_.end(), name);
    if (it == domain_.end())
        throw InvalidArgument("unknown domain value: " + name);
    return static_cast<int>(it - domain_.begin());
}

std::size_t CspInstance::max_relation_size() const {
    std::size_t n = 0;
    for (const auto& c : constraints_)
        n = std::max(n, c.relation.size());
    return n;
}

std::map<std::string, std::string> CspInstance::describe(const Assignment& a) const {
    std::map<std::string, std::string> out;
    for (std::size_t v = 0; v < a.size() && v < variables_.size(); ++v)
        if (a[v] != kUnassigned)
            out.emplace(variables_[v], domain_[static_cast<std::size_t>(a[v])]);
    return out;
}

std::uint64_t instance_size(const CspInstance& i) {
    std::uint64_t total = i.num_variables() + i.domain_size();
    for (const auto& c : i.constraints()) {
        std::uint64_t k = c.scope.size();
        total += k + k * c.relation.size();
    }
    return total;
}

Hypergraph hypergraph_of(const CspInstance& i) {
    std::vector<VertexSet> edges;
    for (const auto& c : i.constraints()) {
        VertexSet e(i.num_variables());
        for (int v : c.scope)
            e.insert(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_sets(i.variables(), edges);
}

Relation project_relation(const Relation& r, const std::vector<std::size_t>& positions) {
    if (positions.empty())
        throw InvalidArgument("projection onto no positions");
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (positions[k] >= r.arity())
            throw InvalidArgument("projection position out of range");
        if (k > 0 && positions[k] <= positions[k - 1])
            throw InvalidArgument("projection positions must be strictly increasing");
    }
    std::vector<Tuple> out;
    out.reserve(r.size());
    for (const auto& t : r.tuples()) {
        Tuple p;
        p.reserve(positions.size());
        for (auto pos : positions)
            p.push_back(t[pos]);
        out.push_back(std::move(p));
    }
    return Relation(positions.size(), std::move(out));
}

CspInstance induced_instance(const CspInstance& i, const std::vector<int>& sub) {
    if (sub.empty())
        throw InvalidArgument("induced instance on an empty variable set");
    std::vector<int> local(i.num_variables(), -1);
    for (int v : sub) {
        if (v < 0 || static_cast<std::size_t>(v) >= i.num_variables())
            throw InvalidArgument("induced instance on an unknown variable");
        local[static_cast<std::size_t>(v)] = 0;
    }
    std::vector<std::string> names;
    for (std::size_t v = 0; v < i.num_variables(); ++v)
        if (local[v] == 0) {
            local[v] = static_cast<int>(names.size());
            names.push_back(i.variables()[v]);
        }

    std::vector<Constraint> cs;
    for (const auto& c : i.constraints()) {
        std::vector<std::size_t> positions;
        Constraint out;
        for (std::size_t p = 0; p < c.scope.size(); ++p)
            if (local[static_cast<std::size_t>(c.scope[p])] >= 0) {
                positions.push_back(p);
                out.scope.push_back(local[static_cast<std::size_t>(c.scope[p])]);
            }
        if (positions.empty())
            continue;
        out.relation = positions.size() == c.scope.size() ? c.relation : project_relation(c.relation, positions);
        cs.push_back(std::move(out));
    }
    return CspInstance(std::move(names), i.domain(), std::move(cs));
}

bool is_solution(const CspInstance& i, const Assignment& a) {
    if (a.size() != i.num_variables())
        throw InvalidArgument("assignment size does not match the variable count");
    for (int d : a)
        if (d == kUnassigned)
            throw InvalidArgument("partial assignment");
    Tuple t;
    for (const auto& c : i.constraints()) {
        t.clear();
        for (int v : c.scope)
            t.push_back(a[static_cast<std::size_t>(v)]);
        if (!c.relation.contains(t))
            return false;
    }
    return true;
}

std::vector<Assignment> brute_force_solutions(const CspInstance& i, std::uint64_t cap) {
    const auto n = i.num_variables();
    const auto d = i.domain_size();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (d == 0 || total > cap / d) {
            if (d == 0)
                return {};
            throw ResourceLimit("brute force enumeration exceeds the cap");
        }
        total *= d;
    }
    std::vector<Assignment> out;
    Assignment a(n, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        if (is_solution(i, a))
            out.push_back(a);
        for (std::size_t pos = n; pos-- > 0;) {
            if (++a[pos] < static_cast<int>(d))
                break;
            a[pos] = 0;
        }
    }
    return out;
}

CspInstance structures_to_csp(const RelationalStructure& a, const RelationalStructure& b) {
    if (a.relations.size() != b.relations.size())
        throw InvalidArgument("structures have different signatures");
    auto arity_of = [](const std::vector<std::vector<std::string>>& tuples) -> std::size_t {
        std::size_t k = tuples.empty() ? 0 : tuples.front().size();
        for (const auto& t : tuples)
            if (t.size() != k)
                throw InvalidArgument("relation with tuples of mixed length");
        return k;
    };

    std::vector<CspInstance::NamedConstraint> cs;
    std::vector<bool> used(a.universe.size(), false);
    for (const auto& [name, tuples_a] : a.relations) {
        auto it = b.relations.find(name);
        if (it == b.relations.end())
            throw InvalidArgument("structures have different signatures: " + name);
        auto ka = arity_of(tuples_a), kb = arity_of(it->second);
        if (ka && kb && ka != kb)
            throw InvalidArgument("relation " + name + " has different arities");
        for (const auto& t : tuples_a) {
            cs.push_back({t, it->second});
            for (const auto& x : t) {
                auto pos = std::find(a.universe.begin(), a.universe.end(), x);
                if (pos == a.universe.end())
                    throw InvalidArgument("tuple element outside the universe: " + x);
                used[static_cast<std::size_t>(pos - a.universe.begin())] = true;
            }
        }
    }
    // Elements in no tuple may map anywhere.
    std::vector<std::vector<std::string>> anything;
    for (const auto& y : b.universe)
        anything.push_back({y});
    for (std::size_t k = 0; k < used.size(); ++k)
        if (!used[k])
            cs.push_back({{a.universe[k]}, anything});
    return CspInstance::from_names(a.universe, b.universe, cs);
}

} // namespace fhtw
