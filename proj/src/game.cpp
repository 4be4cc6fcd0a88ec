#include "fhtw/game.hpp"

#include "fhtw/errors.hpp"
#include "fhtw/weights.hpp"

#include <algorithm>

namespace fhtw {

namespace {

using Mask = std::uint64_t;

void check_cap(const Hypergraph& h, std::size_t cap) {
    if (h.num_vertices() > cap || h.num_vertices() > 24)
        throw ResourceLimit("game analysis is limited to " + std::to_string(std::min<std::size_t>(cap, 24)) +
                            " vertices");
}

// rho*(S) for every S ⊆ V(h), indexed by mask.
std::vector<Rational> subset_covers(const Hypergraph& h) {
    const auto n = h.num_vertices();
    std::vector<Rational> table(std::size_t{1} << n);
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        table[s] = cover_value(h, VertexSet::from_mask(n, s));
    return table;
}

std::vector<VertexSet> maximal_blockable(const Hypergraph& h, const std::vector<Rational>& covers,
                                         const Rational& r) {
    const auto n = h.num_vertices();
    std::vector<VertexSet> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (covers[s] > r)
            continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v)
            if (!(s >> v & 1U) && covers[s | (Mask{1} << v)] <= r)
                maximal = false;
        if (maximal)
            out.push_back(VertexSet::from_mask(n, s));
    }
    return out;
}

GameAnalysis solve(const Hypergraph& h, const Rational& r, const std::vector<Rational>& covers) {
    GameAnalysis g;
    g.arena = {h, r, maximal_blockable(h, covers, r)};
    const auto n = h.num_vertices();
    const auto& family = g.arena.blockable;
    const std::size_t f = family.size();

    std::vector<Mask> blocked(f + 1, 0);
    for (std::size_t k = 0; k < f; ++k)
        blocked[k] = family[k].mask();

    // escape[k][k'][v]: vertices the robber can reach from v while the
    // general moves from blocked[k] to blocked[k'].
    std::vector<std::vector<std::vector<Mask>>> escape(f + 1, std::vector<std::vector<Mask>>(f));
    for (std::size_t k = 0; k <= f; ++k)
        for (std::size_t k2 = 0; k2 < f; ++k2) {
            auto& reach = escape[k][k2];
            reach.assign(n, 0);
            for (const auto& comp : components(h, VertexSet::from_mask(n, blocked[k] & blocked[k2])))
                for (int v : comp.members())
                    reach[static_cast<std::size_t>(v)] = comp.mask();
        }

    std::vector<Mask> winning(f + 1, 0);
    g.winning_move.assign(f + 1, std::vector<int>(n, -1));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k <= f; ++k) {
            for (std::size_t v = 0; v < n; ++v) {
                if ((blocked[k] >> v & 1U) || (winning[k] >> v & 1U))
                    continue;
                for (std::size_t k2 = 0; k2 < f; ++k2) {
                    Mask reach = escape[k][k2][v];
                    if ((reach & ~(blocked[k2] | winning[k2])) == 0) {
                        winning[k] |= Mask{1} << v;
                        g.winning_move[k][v] = static_cast<int>(k2);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    g.general_wins = winning[f] == all;
    return g;
}

} // namespace

std::vector<VertexSet> blockable_family(const Hypergraph& h, const Rational& r, std::size_t cap) {
    if (sgn(r) < 0)
        throw InvalidArgument("negative budget");
    check_cap(h, cap);
    return maximal_blockable(h, subset_covers(h), r);
}

GameArena make_arena(const Hypergraph& h, const Rational& r, std::size_t cap) {
    return {h, r, blockable_family(h, r, cap)};
}

GameAnalysis analyze_game(const Hypergraph& h, const Rational& r, std::size_t cap) {
    if (sgn(r) < 0)
        throw InvalidArgument("negative budget");
    check_cap(h, cap);
    return solve(h, r, subset_covers(h));
}

bool general_wins(const Hypergraph& h, const Rational& r, std::size_t cap) {
    return analyze_game(h, r, cap).general_wins;
}

Rational army_width(const Hypergraph& h, std::size_t cap) {
    check_cap(h, cap);
    auto covers = subset_covers(h);
    auto candidates = covers;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates)
        if (solve(h, r, covers).general_wins)
            return r;
    throw InternalError("general loses even when every vertex is blockable");
}

} // namespace fhtw
