#include "fhtw/generators.hpp"

#include "fhtw/errors.hpp"
#include "fhtw/weights.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace fhtw {

namespace {

// Portable draws: std distributions differ across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  private:
    std::mt19937_64 engine_;
};

// base^exp, or nullopt once the result exceeds limit.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t k = 0; k < exp; ++k) {
        if (base != 0 && out > limit / base)
            return std::nullopt;
        out *= base;
    }
    if (out > limit)
        return std::nullopt;
    return out;
}

} // namespace

TightExponents tight_exponents(const Hypergraph& h) {
    auto y = fractional_independent_set(h).weights;
    mpz_class q = 1;
    for (const auto& w : y)
        q = lcm(q, mpz_class(w.get_den()));
    if (!q.fits_ulong_p())
        throw ResourceLimit("independent set denominators too large");
    TightExponents out;
    out.denominator = q.get_ui();
    for (const auto& w : y) {
        mpz_class p = w.get_num() * (q / w.get_den());
        out.numerators.push_back(p.get_ui());
    }
    return out;
}

CspInstance generate_tight(const Hypergraph& h, std::uint64_t n0, std::uint64_t domain_cap) {
    if (n0 < 1)
        throw InvalidArgument("n0 must be at least 1");
    auto exps = tight_exponents(h);
    auto big_n = bounded_pow(n0, exps.denominator, domain_cap);
    if (!big_n)
        throw ResourceLimit("tight instance domain n0^q exceeds the cap");

    std::vector<std::string> domain;
    for (std::uint64_t k = 1; k <= *big_n; ++k)
        domain.push_back(std::to_string(k));

    std::vector<std::uint64_t> range(h.num_vertices());
    for (std::size_t v = 0; v < h.num_vertices(); ++v)
        range[v] = *bounded_pow(n0, exps.numerators[v], *big_n);

    std::vector<Constraint> constraints;
    for (const auto& e : h.edges()) {
        Constraint c;
        c.scope = e.members();
        std::vector<Tuple> tuples;
        Tuple t(c.scope.size(), 0);
        for (;;) {
            tuples.push_back(t);
            std::size_t pos = t.size();
            while (pos-- > 0) {
                if (static_cast<std::uint64_t>(++t[pos]) < range[static_cast<std::size_t>(c.scope[pos])])
                    break;
                t[pos] = 0;
            }
            if (pos == static_cast<std::size_t>(-1))
                break;
        }
        c.relation = Relation(c.scope.size(), std::move(tuples));
        constraints.push_back(std::move(c));
    }
    return CspInstance(h.names(), std::move(domain), std::move(constraints));
}

Hypergraph generate_hn(int n) {
    if (n < 1 || n > kMaxHn)
        throw InvalidArgument("H_n is generated for 1 <= n <= " + std::to_string(kMaxHn));
    const int ground = 2 * n;
    std::vector<std::string> names;
    std::vector<unsigned> subsets;
    for (unsigned s = 0; s < (1U << ground); ++s) {
        if (std::popcount(s) != n)
            continue;
        std::string name = "v{";
        bool first = true;
        for (int i = 0; i < ground; ++i)
            if (s >> i & 1U) {
                name += (first ? "" : ",") + std::to_string(i + 1);
                first = false;
            }
        names.push_back(name + "}");
        subsets.push_back(s);
    }
    // Vertices sorted by their element lists: v{1,2} < v{1,3} < ...
    std::vector<std::size_t> idx(subsets.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto elements = [&](unsigned s) {
        std::vector<int> el;
        for (int i = 0; i < ground; ++i)
            if (s >> i & 1U)
                el.push_back(i);
        return el;
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return elements(subsets[a]) < elements(subsets[b]); });
    std::vector<std::string> sorted_names;
    std::vector<unsigned> sorted_subsets;
    for (auto k : idx) {
        sorted_names.push_back(names[k]);
        sorted_subsets.push_back(subsets[k]);
    }
    std::vector<VertexSet> edges;
    for (int i = 0; i < ground; ++i) {
        VertexSet e(sorted_subsets.size());
        for (std::size_t v = 0; v < sorted_subsets.size(); ++v)
            if (sorted_subsets[v] >> i & 1U)
                e.insert(static_cast<int>(v));
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_sets(std::move(sorted_names), edges);
}

Hypergraph generate_matching(int k) {
    if (k < 1)
        throw InvalidArgument("matching needs at least one edge");
    std::vector<std::vector<std::string>> edges;
    for (int i = 1; i <= k; ++i)
        edges.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
    return Hypergraph({}, edges);
}

Hypergraph generate_universal(int n) {
    if (n < 1)
        throw InvalidArgument("universal hypergraph needs at least one vertex");
    std::vector<std::string> all;
    for (int i = 1; i <= n; ++i)
        all.push_back("u" + std::to_string(i));
    return Hypergraph({}, {all});
}

Hypergraph generate_path(int n) {
    if (n < 1)
        throw InvalidArgument("path needs at least one vertex");
    if (n == 1)
        return Hypergraph({}, {{"p1"}});
    std::vector<std::vector<std::string>> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({"p" + std::to_string(i), "p" + std::to_string(i + 1)});
    return Hypergraph({}, edges);
}

Hypergraph generate_cycle(int n) {
    if (n < 3)
        throw InvalidArgument("cycle needs at least three vertices");
    std::vector<std::vector<std::string>> edges;
    for (int i = 1; i <= n; ++i)
        edges.push_back({"c" + std::to_string(i), "c" + std::to_string(i % n + 1)});
    return Hypergraph({}, edges);
}

CspInstance generate_random(std::uint64_t seed, int num_vars, int domain_size, int num_constraints, int max_arity,
                            double tuple_density) {
    if (num_vars < 1 || domain_size < 1 || num_constraints < 1 || max_arity < 1)
        throw InvalidArgument("random instance parameters must be positive");
    if (!(tuple_density >= 0.0 && tuple_density <= 1.0))
        throw InvalidArgument("tuple density must lie in [0,1]");
    const int arity_limit = std::min(max_arity, num_vars);
    if (static_cast<long>(num_constraints) * arity_limit < num_vars)
        throw InvalidArgument("too few constraint slots to cover every variable");

    Rng rng(seed);
    std::vector<int> arity(static_cast<std::size_t>(num_constraints));
    long slots = 0;
    for (auto& a : arity) {
        a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(arity_limit)));
        slots += a;
    }
    for (std::size_t k = 0; slots < num_vars; k = (k + 1) % arity.size())
        if (arity[k] < arity_limit) {
            ++arity[k];
            ++slots;
        }

    std::vector<int> perm(static_cast<std::size_t>(num_vars));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = perm.size(); k > 1; --k)
        std::swap(perm[k - 1], perm[rng.below(k)]);

    std::uint64_t max_tuples = 1;
    for (int k = 0; k < arity_limit; ++k)
        max_tuples *= static_cast<std::uint64_t>(domain_size);
    if (max_tuples > 1'000'000)
        throw ResourceLimit("random relations would exceed a million candidate tuples");

    std::vector<Constraint> constraints;
    std::size_t next_uncovered = 0;
    for (int a : arity) {
        Constraint c;
        while (static_cast<int>(c.scope.size()) < a && next_uncovered < perm.size())
            c.scope.push_back(perm[next_uncovered++]);
        while (static_cast<int>(c.scope.size()) < a) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars)));
            if (std::find(c.scope.begin(), c.scope.end(), v) == c.scope.end())
                c.scope.push_back(v);
        }
        std::vector<Tuple> tuples;
        Tuple t(c.scope.size(), 0);
        for (;;) {
            if (rng.chance(tuple_density))
                tuples.push_back(t);
            std::size_t pos = t.size();
            while (pos-- > 0) {
                if (++t[pos] < domain_size)
                    break;
                t[pos] = 0;
            }
            if (pos == static_cast<std::size_t>(-1))
                break;
        }
        c.relation = Relation(c.scope.size(), std::move(tuples));
        constraints.push_back(std::move(c));
    }

    std::vector<std::string> vars, domain;
    for (int k = 1; k <= num_vars; ++k)
        vars.push_back("x" + std::to_string(k));
    for (int k = 0; k < domain_size; ++k)
        domain.push_back(std::to_string(k));
    return CspInstance(std::move(vars), std::move(domain), std::move(constraints));
}

Hypergraph generate_random_hypergraph(std::uint64_t seed, int num_vertices, int num_edges, int max_edge_size) {
    if (num_vertices < 1 || num_edges < 1 || max_edge_size < 1)
        throw InvalidArgument("random hypergraph parameters must be positive");
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(num_vertices);
    const int size_limit = std::min(max_edge_size, num_vertices);
    std::vector<VertexSet> edges;
    VertexSet covered(n);
    for (int k = 0; k < num_edges; ++k) {
        int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(size_limit)));
        VertexSet e(n);
        while (static_cast<int>(e.count()) < size)
            e.insert(static_cast<int>(rng.below(n)));
        covered |= e;
        edges.push_back(std::move(e));
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (covered.contains(static_cast<int>(v)))
            continue;
        VertexSet e(n);
        e.insert(static_cast<int>(v));
        if (n > 1) {
            auto w = static_cast<int>(rng.below(n - 1));
            e.insert(w >= static_cast<int>(v) ? w + 1 : w);
        }
        covered |= e;
        edges.push_back(std::move(e));
    }
    std::vector<std::string> names;
    for (std::size_t v = 1; v <= n; ++v)
        names.push_back("v" + std::to_string(v));
    return Hypergraph::from_sets(std::move(names), edges);
}

} // namespace fhtw
