#pragma once

// JSON interchange formats. Field order is fixed (ordered_json), so the same
// value always serializes to the same bytes.
//
//   graph        {"vertices": V, "edges": [[[v,slot],[v,slot]], ...]}
//   weight set   {"graph": [canonical key], "level": k, "labels": [[j_1..j_E], ...]}
//   polytope     {"dim": d, "ineqs": [["p/q", ..., "p/q"], ...]}   (a_1..a_d, b)
//   multisection {"g": g, "components": [{"A": [[..]], "t": ["p/q", ..]}, ...]}

#include <string>
#include <vector>

#include "json.hpp"
#include "verlinde/abelian.hpp"
#include "verlinde/graph.hpp"
#include "verlinde/polytope.hpp"
#include "verlinde/weights.hpp"

namespace verlinde {

using Json = nlohmann::ordered_json;

Json graph_to_json(const TrinionGraph& g);
/// Throws std::invalid_argument on schema or graph-validity errors.
TrinionGraph graph_from_json(const Json& j);

struct WeightSet {
    CanonicalForm graph;
    int level = 0;
    std::vector<std::vector<int>> labels;  // edge order of the canonical graph

    friend bool operator==(const WeightSet&, const WeightSet&) = default;
};

/// Relabels into the canonical graph's edge order and sorts the labels.
WeightSet make_weight_set(const TrinionGraph& g, int level,
                          const std::vector<WeightAssignment>& labels);
Json weight_set_to_json(const WeightSet& w);
WeightSet weight_set_from_json(const Json& j);

Json polytope_to_json(const ClebschGordanPolytope& p);
ClebschGordanPolytope polytope_from_json(const Json& j);

Json multisection_to_json(const AffineMultisection& m);
AffineMultisection multisection_from_json(const Json& j);

/// Reads and parses a JSON file; throws std::runtime_error if unreadable.
Json read_json_file(const std::string& path);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace verlinde
