#include "verlinde/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

template <typename T>
T field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing JSON field '") + name + "'");
    }
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON field '") + name + "': " + e.what());
    }
}

Json rational_array(const std::vector<Rational>& values)
{
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

std::vector<Rational> parse_rational_array(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("expected an array of rational strings");
    }
    std::vector<Rational> out;
    for (const auto& item : j) {
        if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.emplace_back(item.get<std::int64_t>());
        } else {
            throw std::invalid_argument("rational must be a \"p/q\" string");
        }
    }
    return out;
}

}  // namespace

Json graph_to_json(const TrinionGraph& g)
{
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back(Json::array({Json::array({e.first.vertex, e.first.slot}),
                                     Json::array({e.second.vertex, e.second.slot})}));
    }
    Json out;
    out["vertices"] = g.vertex_count();
    out["edges"] = std::move(edges);
    return out;
}

TrinionGraph graph_from_json(const Json& j)
{
    const int vertices = field<int>(j, "vertices");
    const auto raw = field<std::vector<std::vector<std::vector<int>>>>(j, "edges");
    std::vector<std::pair<HalfEdge, HalfEdge>> edges;
    for (const auto& e : raw) {
        if (e.size() != 2 || e[0].size() != 2 || e[1].size() != 2) {
            throw std::invalid_argument("each edge must be [[v,slot],[v,slot]]");
        }
        edges.emplace_back(HalfEdge{e[0][0], e[0][1]}, HalfEdge{e[1][0], e[1][1]});
    }
    if (static_cast<int>(edges.size()) * 2 != 3 * vertices) {
        throw std::invalid_argument("graph has " + std::to_string(edges.size()) +
                                    " edges; a 3-valent graph on " + std::to_string(vertices) +
                                    " vertices needs " + std::to_string(3 * vertices / 2));
    }
    return TrinionGraph(vertices, edges);
}

WeightSet make_weight_set(const TrinionGraph& g, int level,
                          const std::vector<WeightAssignment>& labels)
{
    const CanonicalLabeling canon = canonical_labeling(g);
    WeightSet out;
    out.graph = canon.form;
    out.level = level;
    for (const auto& w : labels) {
        if (static_cast<int>(w.labels.size()) != g.edge_count()) {
            throw std::invalid_argument("weight assignment does not match the graph");
        }
        std::vector<int> mapped(w.labels.size());
        for (std::size_t e = 0; e < w.labels.size(); ++e) {
            mapped[static_cast<std::size_t>(canon.edge_map[e])] = w.labels[e];
        }
        out.labels.push_back(std::move(mapped));
    }
    std::sort(out.labels.begin(), out.labels.end());
    return out;
}

Json weight_set_to_json(const WeightSet& w)
{
    Json out;
    out["graph"] = w.graph.key;
    out["level"] = w.level;
    out["labels"] = w.labels;
    return out;
}

WeightSet weight_set_from_json(const Json& j)
{
    WeightSet out;
    out.graph.key = field<std::vector<int>>(j, "graph");
    out.level = field<int>(j, "level");
    out.labels = field<std::vector<std::vector<int>>>(j, "labels");
    return out;
}

Json polytope_to_json(const ClebschGordanPolytope& p)
{
    Json ineqs = Json::array();
    for (const auto& row : p.ineqs) {
        Json r = rational_array(row.coeffs);
        r.push_back(to_string(row.bound));
        ineqs.push_back(std::move(r));
    }
    Json out;
    out["dim"] = p.dim;
    out["ineqs"] = std::move(ineqs);
    return out;
}

ClebschGordanPolytope polytope_from_json(const Json& j)
{
    ClebschGordanPolytope p;
    p.dim = field<int>(j, "dim");
    if (p.dim <= 0) {
        throw std::invalid_argument("polytope dimension must be positive");
    }
    if (!j.at("ineqs").is_array()) {
        throw std::invalid_argument("'ineqs' must be an array");
    }
    for (const auto& raw : j.at("ineqs")) {
        auto values = parse_rational_array(raw);
        if (static_cast<int>(values.size()) != p.dim + 1) {
            throw std::invalid_argument("each inequality needs dim + 1 entries");
        }
        Inequality row;
        row.bound = values.back();
        values.pop_back();
        row.coeffs = std::move(values);
        p.ineqs.push_back(std::move(row));
    }
    return p;
}

Json multisection_to_json(const AffineMultisection& m)
{
    Json components = Json::array();
    for (const auto& c : m.components) {
        Json comp;
        comp["A"] = c.matrix;
        comp["t"] = rational_array(c.shift);
        components.push_back(std::move(comp));
    }
    Json out;
    out["g"] = m.genus;
    out["components"] = std::move(components);
    return out;
}

AffineMultisection multisection_from_json(const Json& j)
{
    AffineMultisection m;
    m.genus = field<int>(j, "g");
    if (!j.contains("components") || !j.at("components").is_array()) {
        throw std::invalid_argument("'components' must be an array");
    }
    for (const auto& raw : j.at("components")) {
        MultisectionComponent c;
        c.matrix = field<IntMatrix>(raw, "A");
        if (!raw.contains("t")) {
            throw std::invalid_argument("missing JSON field 't'");
        }
        c.shift = parse_rational_array(raw.at("t"));
        for (const auto& t : c.shift) {
            if (t < 0 || t >= 1) {
                throw std::invalid_argument("shift entries must lie in [0, 1)");
            }
        }
        m.components.push_back(std::move(c));
    }
    return m;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace verlinde
