#include "doctest.h"
#include "fixtures.hpp"
#include "../oracles.hpp"

#include "fhtw/errors.hpp"
#include "fhtw/weights.hpp"

#include <random>

using namespace fhtw;
using fx::q;

namespace {

// Covering constraint check for a witness.
bool covers(const Hypergraph& h, const FractionalWeighting& x, const VertexSet& target) {
    for (int v : target.members()) {
        Rational s = 0;
        for (std::size_t e = 0; e < h.num_edges(); ++e)
            if (h.edge(e).contains(v))
                s += x[e];
        if (s < 1)
            return false;
    }
    return true;
}

bool packs(const Hypergraph& h, const std::vector<Rational>& y) {
    for (const auto& e : h.edges()) {
        Rational s = 0;
        for (int v : e.members())
            s += y[static_cast<std::size_t>(v)];
        if (s > 1)
            return false;
    }
    for (const auto& w : y)
        if (sgn(w) < 0)
            return false;
    return true;
}

Rational random_weight(std::mt19937_64& rng) {
    Rational r(static_cast<long>(rng() % 4), static_cast<long>(1 + rng() % 3));
    r.canonicalize();
    return r;
}

} // namespace

TEST_SUITE("weights") {

TEST_CASE("rational text form") {
    CHECK(to_string(Rational(2)) == "2/1");
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(parse_rational("5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("fractional edge cover: frozen values") {
    auto e = fx::single_edge();
    CHECK(fractional_edge_cover(e, e.all_vertices()).value == 1);
    auto h2 = generate_hn(2);
    CHECK(fractional_edge_cover(h2, h2.all_vertices()).value == 2);
    auto t = fx::triangle();
    CHECK(fractional_edge_cover(t, t.all_vertices()).value == q("3/2"));
    for (int k = 1; k <= 5; ++k) {
        auto m = generate_matching(k);
        CHECK(fractional_edge_cover(m, m.all_vertices()).value == k);
    }
    CHECK_THROWS_AS(fractional_edge_cover(t, t.empty_set()), InvalidArgument);
    CHECK(cover_value(t, t.empty_set()) == 0);
}

TEST_CASE("fractional edge cover matches the basic-solution oracle") {
    // Frozen from the oracle: triangle 3/2, H_2 2, cycle5 5/2.
    CHECK(oracle::lp_cover_by_vertices(fx::triangle(), {0, 1, 2}) == q("3/2"));
    CHECK(oracle::lp_cover_by_vertices(generate_hn(2), {0, 1, 2, 3, 4, 5}) == 2);
    CHECK(oracle::lp_cover_by_vertices(generate_cycle(5), {0, 1, 2, 3, 4}) == q("5/2"));
    CHECK(fractional_edge_cover(generate_cycle(5), generate_cycle(5).all_vertices()).value == q("5/2"));

    std::mt19937_64 rng(3);
    for (int round = 0; round < 150; ++round) {
        auto h = generate_random_hypergraph(rng(), 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 4), 3);
        if (h.num_edges() > 5)
            continue;
        auto target = VertexSet::from_mask(h.num_vertices(), rng() & ((1ULL << h.num_vertices()) - 1));
        if (target.empty())
            continue;
        auto got = fractional_edge_cover(h, target);
        CHECK(got.value == oracle::lp_cover_by_vertices(h, target.members()));
        CHECK(got.cover.weight() == got.value);
        CHECK(covers(h, got.cover, target));
        CHECK(cover_value(h, target) == got.value);
    }
}

TEST_CASE("independent set and duality") {
    auto e = fx::single_edge();
    CHECK(fractional_independent_set(e).value == 1);
    auto t = fractional_independent_set(fx::triangle());
    CHECK(t.value == q("3/2"));
    CHECK(t.weights == std::vector<Rational>(3, q("1/2")));
    CHECK(fractional_independent_set(generate_hn(2)).value == 2);

    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        auto h = generate_random_hypergraph(rng(), 1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 8), 4);
        auto y = fractional_independent_set(h);
        auto x = fractional_edge_cover(h, h.all_vertices());
        CHECK(y.value == x.value);
        CHECK(packs(h, y.weights));
        Rational total = 0;
        for (const auto& w : y.weights)
            total += w;
        CHECK(total == y.value);
    }
}

TEST_CASE("integral edge cover") {
    CHECK(integral_edge_cover(fx::single_edge(), fx::single_edge().all_vertices()).value == 1);
    auto m = generate_matching(4);
    CHECK(integral_edge_cover(m, m.all_vertices()).value == 4);
    auto h2 = generate_hn(2);
    // Any two edges e_i, e_j miss v_S for S the complement of {i, j}.
    auto c = integral_edge_cover(h2, h2.all_vertices());
    CHECK(c.value == 3);
    VertexSet u = h2.empty_set();
    for (auto e : c.edges)
        u |= h2.edge(e);
    CHECK(u == h2.all_vertices());
    auto bag = h2.all_vertices();
    bag.erase(h2.index_of("v{3,4}"));
    auto cb = integral_edge_cover(h2, bag);
    CHECK(cb.value == 2);
    CHECK(cb.edges == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(integral_edge_cover(h2, h2.empty_set()), InvalidArgument);
}

TEST_CASE("rho and rho* are monotone in the target") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 60; ++round) {
        auto h = generate_random_hypergraph(rng(), 2 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5), 3);
        const auto n = h.num_vertices();
        auto a = VertexSet::from_mask(n, rng() & ((1ULL << n) - 1));
        a.insert(0);
        auto b = a | VertexSet::from_mask(n, rng() & ((1ULL << n) - 1));
        CHECK(cover_value(h, a) <= cover_value(h, b));
        CHECK(integral_edge_cover(h, a).value <= integral_edge_cover(h, b).value);
        CHECK(cover_value(h, b) <= Rational(static_cast<long>(integral_edge_cover(h, b).value)));
    }
}

TEST_CASE("covers block their target; induced covers are no larger") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        auto h = generate_random_hypergraph(rng(), 1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 6), 4);
        const auto n = h.num_vertices();
        auto x = VertexSet::from_mask(n, rng() & ((1ULL << n) - 1));
        if (x.empty())
            continue;
        auto c = fractional_edge_cover(h, x);
        CHECK(x.is_subset_of(blocked_set(h, c.cover)));
        auto sub = induced_subhypergraph(h, x);
        CHECK(cover_value(sub, sub.all_vertices()) <= cover_value(h, h.all_vertices()));
        CHECK(cover_value(sub, sub.all_vertices()) == c.value);
    }
}

TEST_CASE("blocked set and restricted weight") {
    auto t = fx::triangle();
    CHECK(blocked_set(t, FractionalWeighting::zero(t)).empty());
    FractionalWeighting half(std::vector<Rational>(3, q("1/2")));
    CHECK(blocked_set(t, half) == t.all_vertices());

    auto h2 = generate_hn(2);
    FractionalWeighting g(h2.num_edges());
    g.set(0, q("1/2"));
    g.set(1, q("1/2"));
    VertexSet expect = h2.empty_set();
    for (int v = 0; v < static_cast<int>(h2.num_vertices()); ++v) {
        Rational s = 0;
        for (std::size_t e = 0; e < h2.num_edges(); ++e)
            if (h2.edge(e).contains(v))
                s += g[e];
        if (s >= 1)
            expect.insert(v);
    }
    CHECK(blocked_set(h2, g) == expect);
    CHECK(h2.names_of(expect) == std::vector<std::string>{"v{1,2}"});

    auto p = fx::path_abc();
    FractionalWeighting gp(std::vector<Rational>{q("1/3"), q("1/2")});
    CHECK(restricted_weight(p, gp, p.empty_set()) == 0);
    CHECK(restricted_weight(p, gp, p.all_vertices()) == gp.weight());
    CHECK(restricted_weight(p, gp, p.make_set({"a"})) == q("1/3"));
    CHECK_THROWS_AS(gp.set(0, Rational(-1)), InvalidArgument);
}

TEST_CASE("restriction and canonical extension") {
    Hypergraph host({}, {{"a", "b"}, {"a", "c"}});
    FractionalWeighting g(std::vector<Rational>{q("1/2"), q("1/2")});
    auto sub = induced_subhypergraph(host, std::vector<std::string>{"a"});
    auto r = restrict_weighting(host, g, sub);
    CHECK(r.values() == std::vector<Rational>{Rational(1)});
    CHECK(extend_weighting(host, r, sub) == g);
    CHECK(restrict_weighting(host, g, host) == g);
    CHECK(extend_weighting(host, g, host) == g);
    CHECK_THROWS_AS(restrict_weighting(host, g, Hypergraph({}, {{"z"}})), InvalidArgument);

    std::mt19937_64 rng(13);
    for (int round = 0; round < 200; ++round) {
        auto h = generate_random_hypergraph(rng(), 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5), 3);
        const auto n = h.num_vertices();
        auto x = VertexSet::from_mask(n, rng() & ((1ULL << n) - 1));
        if (x.empty())
            continue;
        FractionalWeighting gamma(h.num_edges());
        for (std::size_t e = 0; e < h.num_edges(); ++e)
            gamma.set(e, random_weight(rng));
        auto s = induce(h, x);

        auto gs = restrict_weighting(h, gamma, s);
        Rational met = 0;
        for (std::size_t e = 0; e < h.num_edges(); ++e)
            if (h.edge(e).intersects(x))
                met += gamma[e];
        CHECK(gs.weight() == met);
        // B(gamma|x) = B(gamma) ∩ x, mapped to sub indices.
        VertexSet host_blocked = blocked_set(h, gamma) & x;
        VertexSet mapped(n);
        for (int v : blocked_set(s.graph, gs).members())
            mapped.insert(s.to_host[static_cast<std::size_t>(v)]);
        CHECK(mapped == host_blocked);

        FractionalWeighting gsub(s.graph.num_edges());
        for (std::size_t e = 0; e < s.graph.num_edges(); ++e)
            gsub.set(e, random_weight(rng));
        auto ext = extend_weighting(h, gsub, s);
        CHECK(ext.weight() == gsub.weight());
        CHECK(restrict_weighting(h, ext, s) == gsub);
        VertexSet ext_blocked = blocked_set(h, ext) & x;
        VertexSet sub_blocked(n);
        for (int v : blocked_set(s.graph, gsub).members())
            sub_blocked.insert(s.to_host[static_cast<std::size_t>(v)]);
        CHECK(ext_blocked == sub_blocked);
    }
}

}
