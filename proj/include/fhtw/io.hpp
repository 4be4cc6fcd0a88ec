#pragma once

#include "fhtw/csp.hpp"
#include "fhtw/decomposition.hpp"
#include "fhtw/hypergraph.hpp"
#include "fhtw/weights.hpp"

#include "json.hpp"

namespace fhtw {

using Json = nlohmann::ordered_json;

/// { "vertices": [...], "edges": [[...], ...] }; "vertices" may be omitted.
Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

/// { "variables": [...], "domain": [...], "constraints": [{ "scope": [...], "tuples": [[...]] }] }
Json to_json(const CspInstance& i);
CspInstance instance_from_json(const Json& j);

/// Nonzero entries as [{ "edge": [...], "weight": "p/q" }].
Json weighting_to_json(const Hypergraph& h, const FractionalWeighting& w);
FractionalWeighting weighting_from_json(const Hypergraph& h, const Json& j);

/// { "nodes": [{ "id", "parent", "bag", "guard" }] }, parents listed before
/// children. Plain tree decompositions carry empty guards; integral guards
/// carry weight "1/1".
Json to_json(const Hypergraph& h, const TreeDecomposition& d);
Json to_json(const Hypergraph& h, const GeneralizedHypertreeDecomposition& d);
Json to_json(const Hypergraph& h, const FractionalHypertreeDecomposition& d);
Json to_json(const Hypergraph& h, const Decomposition& d);
FractionalHypertreeDecomposition decomposition_from_json(const Hypergraph& h, const Json& j);

Json to_json(const ValidationReport& r);

/// { variable: value } for the assigned variables.
Json assignment_to_json(const CspInstance& i, const Assignment& a);

} // namespace fhtw
