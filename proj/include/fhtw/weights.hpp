#pragma once

#include "fhtw/hypergraph.hpp"
#include "fhtw/rational.hpp"

#include <cstddef>
#include <vector>

namespace fhtw {

/// Nonnegative rational weight per edge of a host hypergraph; indexed by the
/// host's edge order. Missing entries never occur: unweighted edges hold 0.
class FractionalWeighting {
  public:
    FractionalWeighting() = default;
    explicit FractionalWeighting(std::size_t num_edges) : weights_(num_edges, Rational(0)) {}
    explicit FractionalWeighting(std::vector<Rational> weights);

    static FractionalWeighting zero(const Hypergraph& h) { return FractionalWeighting(h.num_edges()); }

    std::size_t size() const { return weights_.size(); }
    const Rational& operator[](std::size_t e) const { return weights_[e]; }
    void set(std::size_t e, Rational w);
    void add(std::size_t e, const Rational& w) { set(e, weights_[e] + w); }
    const std::vector<Rational>& values() const { return weights_; }

    /// Total weight.
    Rational weight() const;

    FractionalWeighting& operator+=(const FractionalWeighting& o);
    friend FractionalWeighting operator+(FractionalWeighting a, const FractionalWeighting& b) { return a += b; }
    friend bool operator==(const FractionalWeighting&, const FractionalWeighting&) = default;

  private:
    std::vector<Rational> weights_;
};

/// B(gamma): vertices whose incident weight sums to at least 1.
VertexSet blocked_set(const Hypergraph& h, const FractionalWeighting& gamma);

/// Sum of gamma over edges meeting w.
Rational restricted_weight(const Hypergraph& h, const FractionalWeighting& gamma, const VertexSet& w);

/// Restriction to an induced subhypergraph: the weight of e' is the sum over
/// host edges whose trace on V(sub) is exactly e'.
FractionalWeighting restrict_weighting(const Hypergraph& host, const FractionalWeighting& gamma,
                                       const InducedSubhypergraph& sub);

/// Canonical extension back to the host: each sub-edge's weight is split
/// evenly among the host edges tracing to it.
FractionalWeighting extend_weighting(const Hypergraph& host, const FractionalWeighting& gamma_sub,
                                     const InducedSubhypergraph& sub);

/// Name-matched overloads. `sub` must be an induced subhypergraph of `host`
/// (same names); otherwise InvalidArgument.
FractionalWeighting restrict_weighting(const Hypergraph& host, const FractionalWeighting& gamma, const Hypergraph& sub);
FractionalWeighting extend_weighting(const Hypergraph& host, const FractionalWeighting& gamma_sub, const Hypergraph& sub);

struct EdgeCover {
    Rational value;
    FractionalWeighting cover;
};

struct IndependentSet {
    Rational value;
    std::vector<Rational> weights; ///< per vertex
};

struct IntegralCover {
    std::size_t value = 0;
    std::vector<std::size_t> edges; ///< witness, by host edge index
};

/// Minimum-weight fractional edge cover of `target` using all edges of h.
/// Solved exactly; target = V(h) yields rho*(h). Throws InvalidArgument on an
/// empty target.
EdgeCover fractional_edge_cover(const Hypergraph& h, const VertexSet& target);

/// Same LP value, no witness; returns 0 on an empty target. Used by the
/// exhaustive searches that price many candidate sets.
Rational cover_value(const Hypergraph& h, const VertexSet& target);

/// Maximum fractional independent set of h (the dual packing program).
IndependentSet fractional_independent_set(const Hypergraph& h);

/// Minimum number of edges whose union contains `target`, with a witness.
IntegralCover integral_edge_cover(const Hypergraph& h, const VertexSet& target);

} // namespace fhtw
