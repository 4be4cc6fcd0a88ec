#include "fhtw/solver.hpp"

#include "fhtw/enumerate.hpp"
#include "fhtw/errors.hpp"
#include "tuple_hash.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace fhtw {

namespace detail {

// Immutable preprocessing shared by every stream over one instance and
// decomposition. Nodes are renumbered in preorder: node 0 is the root and
// every parent precedes its children.
struct SolverPlan {
    std::size_t num_variables = 0;
    std::size_t domain_size = 0;
    std::vector<int> variable_order;

    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    /// Bag variables laid out as [fresh vars..., shared-with-parent vars...],
    /// each part in variable_order.
    std::vector<std::vector<int>> layout;
    std::vector<std::size_t> fresh_count;
    /// Positions in the parent's layout of this node's shared variables.
    std::vector<std::vector<std::size_t>> parent_positions;

    /// Solutions of I[B_t] in layout order, sorted.
    std::vector<std::vector<Tuple>> bag_solutions;
    /// After unpinned bottom-up pruning.
    std::vector<std::vector<Tuple>> pruned;
    /// For each non-root node: shared-variable key -> indices into pruned[t].
    std::vector<std::unordered_map<Tuple, std::vector<std::size_t>, TupleHash>> buckets;
    /// 0..|pruned[0]|-1: the root's candidates.
    std::vector<std::size_t> root_bucket;

    std::vector<std::vector<Tuple>> prune(const Assignment* pinned) const;
};

namespace {

Tuple shared_key(const SolverPlan& plan, std::size_t t, const Tuple& tuple) {
    return Tuple(tuple.begin() + static_cast<long>(plan.fresh_count[t]), tuple.end());
}

Tuple key_in_parent(const SolverPlan& plan, std::size_t child, const Tuple& parent_tuple) {
    Tuple key;
    key.reserve(plan.parent_positions[child].size());
    for (auto p : plan.parent_positions[child])
        key.push_back(parent_tuple[p]);
    return key;
}

} // namespace

std::vector<std::vector<Tuple>> SolverPlan::prune(const Assignment* pinned) const {
    const auto n = parent.size();
    std::vector<std::vector<Tuple>> lists(n);
    for (std::size_t t = 0; t < n; ++t) {
        if (!pinned) {
            lists[t] = bag_solutions[t];
            continue;
        }
        for (const auto& tuple : bag_solutions[t]) {
            bool ok = true;
            for (std::size_t p = 0; p < layout[t].size() && ok; ++p) {
                int want = (*pinned)[static_cast<std::size_t>(layout[t][p])];
                ok = want == kUnassigned || want == tuple[p];
            }
            if (ok)
                lists[t].push_back(tuple);
        }
    }
    for (std::size_t t = n; t-- > 0;) {
        for (int c : children[t]) {
            const auto cu = static_cast<std::size_t>(c);
            std::unordered_set<Tuple, TupleHash> keys;
            for (const auto& tuple : lists[cu])
                keys.insert(shared_key(*this, cu, tuple));
            std::erase_if(lists[t], [&](const Tuple& tuple) { return !keys.contains(key_in_parent(*this, cu, tuple)); });
        }
    }
    return lists;
}

} // namespace detail

namespace {

using detail::SolverPlan;

std::shared_ptr<const SolverPlan> make_plan(const CspInstance& i, const FractionalHypertreeDecomposition& d) {
    const auto h = hypergraph_of(i);
    auto report = validate(h, d);
    if (!report.valid) {
        std::string why = report.violations.empty() ? "invalid decomposition" : report.violations.front();
        throw InvalidArgument("decomposition is not valid for this instance: " + why);
    }

    auto plan = std::make_shared<SolverPlan>();
    plan->num_variables = i.num_variables();
    plan->domain_size = i.domain_size();

    const auto order = d.tree.preorder();
    const auto n = order.size();
    std::vector<int> renumber(d.tree.size(), -1);
    for (std::size_t k = 0; k < n; ++k)
        renumber[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

    std::vector<bool> seen(i.num_variables(), false);
    for (int t : order)
        for (int v : d.tree.bags[static_cast<std::size_t>(t)].members())
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                plan->variable_order.push_back(v);
            }
    std::vector<std::size_t> rank(i.num_variables());
    for (std::size_t k = 0; k < plan->variable_order.size(); ++k)
        rank[static_cast<std::size_t>(plan->variable_order[k])] = k;

    plan->parent.resize(n);
    plan->children.resize(n);
    plan->layout.resize(n);
    plan->fresh_count.resize(n);
    plan->parent_positions.resize(n);
    plan->bag_solutions.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto t = static_cast<std::size_t>(order[k]);
        int p = d.tree.parent[t];
        plan->parent[k] = p < 0 ? -1 : renumber[static_cast<std::size_t>(p)];
        if (plan->parent[k] >= 0)
            plan->children[static_cast<std::size_t>(plan->parent[k])].push_back(static_cast<int>(k));

        auto bag = d.tree.bags[t].members();
        std::sort(bag.begin(), bag.end(), [&](int a, int b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; });
        std::vector<int> fresh, shared;
        for (int v : bag) {
            bool in_parent = p >= 0 && d.tree.bags[static_cast<std::size_t>(p)].contains(v);
            (in_parent ? shared : fresh).push_back(v);
        }
        plan->fresh_count[k] = fresh.size();
        auto& layout = plan->layout[k];
        layout = fresh;
        layout.insert(layout.end(), shared.begin(), shared.end());

        if (plan->parent[k] >= 0) {
            const auto& pl = plan->layout[static_cast<std::size_t>(plan->parent[k])];
            for (int v : shared)
                plan->parent_positions[k].push_back(static_cast<std::size_t>(std::find(pl.begin(), pl.end(), v) - pl.begin()));
        }

        auto& sols = plan->bag_solutions[k];
        if (bag.empty()) {
            sols.push_back({});
            continue;
        }
        // I[B_t] has the bag's variables in instance order.
        auto members = d.tree.bags[t].members();
        std::vector<std::size_t> local(i.num_variables());
        for (std::size_t q = 0; q < members.size(); ++q)
            local[static_cast<std::size_t>(members[q])] = q;
        for (const auto& a : enumerate_by_cover(induced_instance(i, members))) {
            Tuple tuple;
            tuple.reserve(layout.size());
            for (int v : layout)
                tuple.push_back(a[local[static_cast<std::size_t>(v)]]);
            sols.push_back(std::move(tuple));
        }
        std::sort(sols.begin(), sols.end());
    }

    plan->pruned = plan->prune(nullptr);
    plan->root_bucket.resize(plan->pruned[0].size());
    std::iota(plan->root_bucket.begin(), plan->root_bucket.end(), std::size_t{0});
    plan->buckets.resize(n);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t q = 0; q < plan->pruned[k].size(); ++q)
            plan->buckets[k][detail::shared_key(*plan, k, plan->pruned[k][q])].push_back(q);
    return plan;
}

} // namespace

std::vector<int> preorder_variable_order(const CspInstance& i, const FractionalHypertreeDecomposition& d) {
    return make_plan(i, d)->variable_order;
}

std::vector<std::vector<Assignment>> pruned_bag_solutions(const CspInstance& i,
                                                          const FractionalHypertreeDecomposition& d) {
    auto plan = make_plan(i, d);
    // Report in the caller's node numbering.
    const auto order = d.tree.preorder();
    std::vector<std::vector<Assignment>> out(d.tree.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto& dest = out[static_cast<std::size_t>(order[k])];
        for (const auto& tuple : plan->pruned[k]) {
            Assignment a(i.num_variables(), kUnassigned);
            for (std::size_t p = 0; p < tuple.size(); ++p)
                a[static_cast<std::size_t>(plan->layout[k][p])] = tuple[p];
            dest.push_back(std::move(a));
        }
    }
    return out;
}

std::optional<Assignment> solve_with_decomposition(const CspInstance& i, const FractionalHypertreeDecomposition& d) {
    return enumerate_all(i, d).next();
}

std::optional<Assignment> solve(const CspInstance& i, std::size_t cap) {
    if (i.num_variables() > cap)
        throw ResourceLimit("exact decomposition is limited to " + std::to_string(cap) + " variables");
    auto h = hypergraph_of(i);
    return solve_with_decomposition(i, optimal_fractional_decomposition(h, cap));
}

SolutionStream::SolutionStream(std::shared_ptr<const detail::SolverPlan> plan)
    : plan_(std::move(plan)), bucket_(plan_->parent.size(), nullptr), pos_(plan_->parent.size(), 0),
      current_(plan_->num_variables, kUnassigned) {}

void SolutionStream::write(std::size_t k) {
    const auto& tuple = plan_->pruned[k][(*bucket_[k])[pos_[k]]];
    const auto& layout = plan_->layout[k];
    for (std::size_t p = 0; p < plan_->fresh_count[k]; ++p)
        current_[static_cast<std::size_t>(layout[p])] = tuple[p];
}

// Resets nodes k.. to their least entry compatible with the choices above.
// Pruning guarantees each bucket is nonempty.
void SolutionStream::descend_from(std::size_t k) {
    for (; k < bucket_.size(); ++k) {
        const auto parent = static_cast<std::size_t>(plan_->parent[k]);
        const auto& parent_tuple = plan_->pruned[parent][(*bucket_[parent])[pos_[parent]]];
        auto it = plan_->buckets[k].find(detail::key_in_parent(*plan_, k, parent_tuple));
        if (it == plan_->buckets[k].end())
            throw InternalError("pruned bag list lost a compatible entry");
        bucket_[k] = &it->second;
        pos_[k] = 0;
        write(k);
    }
}

std::optional<Assignment> SolutionStream::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (plan_->pruned.empty() || plan_->pruned[0].empty()) {
            done_ = true;
            return std::nullopt;
        }
        bucket_[0] = &plan_->root_bucket;
        pos_[0] = 0;
        write(0);
        descend_from(1);
        return current_;
    }
    for (std::size_t k = bucket_.size(); k-- > 0;) {
        if (pos_[k] + 1 < bucket_[k]->size()) {
            ++pos_[k];
            write(k);
            descend_from(k + 1);
            return current_;
        }
    }
    done_ = true;
    return std::nullopt;
}

ProjectionStream::ProjectionStream(std::shared_ptr<const detail::SolverPlan> plan, std::vector<int> head)
    : plan_(std::move(plan)), head_(std::move(head)), values_(head_.size(), -1) {}

bool ProjectionStream::extensible(std::size_t depth) const {
    Assignment pinned(plan_->num_variables, kUnassigned);
    for (std::size_t q = 0; q < depth; ++q)
        pinned[static_cast<std::size_t>(head_[q])] = values_[q];
    auto lists = plan_->prune(&pinned);
    return !lists.empty() && !lists[0].empty();
}

std::optional<Assignment> ProjectionStream::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!extensible(0)) {
            done_ = true;
            return std::nullopt;
        }
        depth_ = 0;
        values_[0] = -1;
    } else {
        depth_ = static_cast<long>(head_.size()) - 1;
    }
    const auto d = static_cast<int>(plan_->domain_size);
    while (depth_ >= 0) {
        auto q = static_cast<std::size_t>(depth_);
        if (++values_[q] >= d) {
            values_[q] = -1;
            --depth_;
            continue;
        }
        if (!extensible(q + 1))
            continue;
        if (q + 1 == head_.size()) {
            Assignment out(plan_->num_variables, kUnassigned);
            for (std::size_t k = 0; k < head_.size(); ++k)
                out[static_cast<std::size_t>(head_[k])] = values_[k];
            return out;
        }
        ++depth_;
        values_[q + 1] = -1;
    }
    done_ = true;
    return std::nullopt;
}

SolutionStream enumerate_all(const CspInstance& i, const FractionalHypertreeDecomposition& d) {
    return SolutionStream(make_plan(i, d));
}

ProjectionStream project_solutions(const CspInstance& i, const FractionalHypertreeDecomposition& d,
                                   const std::vector<int>& out_vars) {
    if (out_vars.empty())
        throw InvalidArgument("projection onto no variables");
    for (int v : out_vars)
        if (v < 0 || static_cast<std::size_t>(v) >= i.num_variables())
            throw InvalidArgument("projection variable out of range");
    auto plan = make_plan(i, d);
    std::vector<std::size_t> rank(i.num_variables());
    for (std::size_t k = 0; k < plan->variable_order.size(); ++k)
        rank[static_cast<std::size_t>(plan->variable_order[k])] = k;
    auto head = out_vars;
    std::sort(head.begin(), head.end(), [&](int a, int b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; });
    head.erase(std::unique(head.begin(), head.end()), head.end());
    return ProjectionStream(std::move(plan), std::move(head));
}

} // namespace fhtw
