#pragma once

#include "fhtw/hypergraph.hpp"
#include "fhtw/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fhtw {

inline constexpr std::size_t kDefaultGameCap = 10;

/// Finite quotient of the robber-and-army game at a fixed budget: general
/// moves are identified with the blocked sets they produce, and only the
/// inclusion-maximal blockable sets are kept.
struct GameArena {
    Hypergraph host;
    Rational budget;
    std::vector<VertexSet> blockable;
};

/// All inclusion-maximal S with rho*(S) <= r (covers may use every edge of h).
/// r = 0 gives the single empty set. Throws ResourceLimit above `cap` vertices.
std::vector<VertexSet> blockable_family(const Hypergraph& h, const Rational& r, std::size_t cap = kDefaultGameCap);

GameArena make_arena(const Hypergraph& h, const Rational& r, std::size_t cap = kDefaultGameCap);

/// Solved game: for every position (blocked set, robber vertex) whether the
/// general wins, and a winning move when he does.
struct GameAnalysis {
    GameArena arena;
    bool general_wins = false;
    /// winning_move[k][v]: index into arena.blockable of a winning move from
    /// position (arena.blockable[k], v); the extra row k = blockable.size()
    /// holds the initial positions (empty blocked set). -1 when the robber
    /// escapes or v is already captured.
    std::vector<std::vector<int>> winning_move;
};

/// Least-fixpoint (attractor) computation over the quotient positions.
GameAnalysis analyze_game(const Hypergraph& h, const Rational& r, std::size_t cap = kDefaultGameCap);

bool general_wins(const Hypergraph& h, const Rational& r, std::size_t cap = kDefaultGameCap);

/// Least budget at which the general wins, found among the subset cover
/// values rho*(S), S ⊆ V(h), in increasing order.
Rational army_width(const Hypergraph& h, std::size_t cap = kDefaultGameCap);

} // namespace fhtw
