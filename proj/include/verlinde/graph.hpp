#pragma once

// Trinion dual graphs in the half-edge model.
//
// Vertex v owns half-edges 3v, 3v+1, 3v+2 (slots 0..2). An involution without
// fixed points pairs half-edges into edges; both halves on one vertex form a
// loop. Edges are numbered by their smaller half-edge id, so edge order is a
// function of the pairing alone.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

struct HalfEdge {
    int vertex = 0;
    int slot = 0;

    constexpr int id() const { return 3 * vertex + slot; }
    static constexpr HalfEdge from_id(int id) { return {id / 3, id % 3}; }
    friend constexpr auto operator<=>(HalfEdge, HalfEdge) = default;
};

struct Edge {
    HalfEdge first;   // smaller id
    HalfEdge second;

    bool is_loop() const { return first.vertex == second.vertex; }
};

/// Lexicographically minimal adjacency data over all vertex relabelings;
/// equal keys iff isomorphic as multigraphs with loops.
struct CanonicalForm {
    std::vector<int> key;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

class TrinionGraph {
public:
    /// Validates 3-valence, the involution and connectivity. Throws std::invalid_argument.
    TrinionGraph(int vertex_count, const std::vector<std::pair<HalfEdge, HalfEdge>>& edges);

    static TrinionGraph theta();
    static TrinionGraph dumbbell();

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int genus() const { return edge_count() - vertex_count() + 1; }

    const std::vector<Edge>& edges() const { return edges_; }
    HalfEdge mate(HalfEdge h) const { return HalfEdge::from_id(mate_[h.id()]); }

    /// Index of the edge containing half-edge h.
    int edge_of(HalfEdge h) const { return edge_of_[h.id()]; }

    /// Edge indices at the three slots of v; a loop appears twice.
    std::array<int, 3> incident_edges(int v) const;

    /// Symmetric multiplicity matrix, diagonal = number of loops at the vertex.
    std::vector<std::vector<int>> adjacency() const;

    friend bool operator==(const TrinionGraph& a, const TrinionGraph& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.mate_ == b.mate_;
    }

private:
    TrinionGraph(int vertex_count, std::vector<int> mate);
    void index_edges();

    int vertex_count_;
    std::vector<int> mate_;
    std::vector<Edge> edges_;
    std::vector<int> edge_of_;

    friend TrinionGraph fusion_move(const TrinionGraph&, int, int);
};

/// A graph relabeled into its canonical vertex order, with the map from the
/// original edge indices to edge indices of the canonical graph.
struct CanonicalLabeling {
    CanonicalForm form;
    TrinionGraph graph;
    std::vector<int> edge_map;
};

inline constexpr int kMaxCanonicalVertices = 12;

/// Throws std::invalid_argument above kMaxCanonicalVertices.
CanonicalForm canonical_form(const TrinionGraph& g);
CanonicalLabeling canonical_labeling(const TrinionGraph& g);

/// Every connected 3-valent multigraph with 2g-2 vertices, one per isomorphism
/// class, each in canonical labeling, sorted by canonical key. 2 <= g <= 4.
std::vector<TrinionGraph> generate_genus_graphs(int genus);

/// Contracts the non-loop edge `edge` and re-expands the 4-valent vertex.
/// With {a,b} the other half-edges at the first endpoint and {c,d} at the
/// second (each in slot order), variant 0 regroups as {a,c}|{b,d} and
/// variant 1 as {a,d}|{b,c}. Throws std::invalid_argument on a loop.
TrinionGraph fusion_move(const TrinionGraph& g, int edge, int variant);

/// "theta" / "dumbbell" for the genus-2 classes, otherwise "g<genus>-<index>"
/// with the index into generate_genus_graphs order.
std::string graph_name(const TrinionGraph& g);

}  // namespace verlinde
