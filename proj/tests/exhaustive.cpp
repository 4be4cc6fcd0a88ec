// Width and game invariants over every hypergraph on up to six vertices, one
// representative per isomorphism class (see antichains.hpp).

#include "antichains.hpp"

#include "fhtw/decomposition.hpp"
#include "fhtw/game.hpp"
#include "fhtw/weights.hpp"

#include <cstdio>
#include <cstdlib>

using namespace fhtw;

namespace {

int failures = 0;

void expect(bool ok, const char* what, const Hypergraph& h) {
    if (ok)
        return;
    ++failures;
    std::string edges;
    for (const auto& e : h.edges()) {
        edges += "{";
        for (const auto& v : h.names_of(e))
            edges += v + " ";
        edges += "}";
    }
    std::printf("violated: %s on %s\n", what, edges.c_str());
}

// GYO reduction: drop vertices lying in one edge only and edges inside
// another edge; acyclic iff nothing is left.
bool acyclic(std::vector<std::uint32_t> edges) {
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& e : edges)
            for (int v = 0; v < 32; ++v) {
                if (!(e >> v & 1U))
                    continue;
                int deg = 0;
                for (auto f : edges)
                    deg += f >> v & 1U;
                if (deg == 1) {
                    e &= ~(1U << v);
                    changed = true;
                }
            }
        for (std::size_t a = 0; a < edges.size(); ++a) {
            bool drop = edges[a] == 0;
            for (std::size_t b = 0; b < edges.size() && !drop; ++b)
                drop = a != b && (edges[a] & edges[b]) == edges[a];
            if (drop) {
                edges.erase(edges.begin() + static_cast<long>(a));
                changed = true;
                break;
            }
        }
    }
    return edges.empty();
}

} // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 6;
    for (int n = 1; n <= max_n; ++n) {
        auto classes = antichains::covering_classes(n);
        if (classes.size() != antichains::expected_classes(n)) {
            std::printf("n=%d: %zu classes, expected %zu\n", n, classes.size(), antichains::expected_classes(n));
            ++failures;
        }
        std::size_t width_one = 0;
        for (const auto& f : classes) {
            auto h = antichains::to_hypergraph(f, n);
            auto rho = cover_value(h, h.all_vertices());
            auto tw = exact_width(h, WidthMeasure::Tree).value;
            auto ghw = exact_width(h, WidthMeasure::Generalized).value;
            auto fhw = exact_width(h, WidthMeasure::Fractional).value;
            auto aw = army_width(h);
            width_one += ghw == 1;

            expect(fhw <= ghw && ghw <= tw + 1, "fhw <= ghw <= tw + 1", h);
            expect(fhw <= rho, "fhw <= rho*", h);
            expect((fhw == 1) == (ghw == 1), "fhw = 1 iff ghw = 1", h);
            expect((ghw == 1) == acyclic(f), "ghw = 1 iff acyclic", h);
            expect(aw <= fhw && fhw <= 3 * aw + 2, "aw <= fhw <= 3 aw + 2", h);
            expect(general_wins(h, rho), "general wins with budget rho*", h);
            if (aw > 0)
                expect(!general_wins(h, aw - Rational(1, 64)), "robber wins just below aw", h);

            auto d = decompose_by_separators(h, aw);
            if (!d) {
                expect(false, "separator construction succeeds at r = aw", h);
                continue;
            }
            auto rep = validate(h, *d);
            expect(rep.valid && rep.width <= 3 * aw + 2 && rep.special_condition == std::optional<bool>(true),
                   "separator decomposition valid, width <= 3 aw + 2, special condition", h);
        }
        std::printf("n=%d: %zu classes checked, %zu of ghw 1\n", n, classes.size(), width_one);
        std::fflush(stdout);
    }
    std::printf("%d violations\n", failures);
    return failures == 0 ? 0 : 1;
}
