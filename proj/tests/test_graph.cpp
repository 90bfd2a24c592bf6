#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "verlinde/graph.hpp"

using namespace verlinde;

namespace {

using Matrix = std::vector<std::vector<int>>;

// Canonical key by trying every vertex permutation on the full matrix.
std::vector<int> naive_key(const Matrix& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> key;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                key.push_back(m[perm[i]][perm[j]]);
            }
        }
        if (best.empty() || key < best) {
            best = key;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool matrix_connected(const Matrix& m)
{
    const auto n = m.size();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (m[v][w] > 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Independent enumeration: fill symmetric multiplicity matrices cell by cell
// (loops count 2 towards the degree), keep connected ones, dedupe naively.
std::set<std::vector<int>> recount_classes(int vertices)
{
    Matrix m(static_cast<std::size_t>(vertices), std::vector<int>(static_cast<std::size_t>(vertices), 0));
    std::vector<int> degree(static_cast<std::size_t>(vertices), 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = vertices - 1; i >= 0; --i) {  // reversed vertex order on purpose
        for (int j = i; j < vertices; ++j) {
            cells.emplace_back(i, j);
        }
    }
    std::set<std::vector<int>> classes;
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
        if (c == cells.size()) {
            if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; }) &&
                matrix_connected(m)) {
                classes.insert(naive_key(m));
            }
            return;
        }
        const auto [i, j] = cells[c];
        for (int mult = 0; mult <= 3; ++mult) {
            const int di = degree[i] + (i == j ? 2 * mult : mult);
            const int dj = i == j ? di : degree[j] + mult;
            if (di > 3 || dj > 3) {
                break;
            }
            m[i][j] = m[j][i] = mult;
            degree[i] += i == j ? 2 * mult : mult;
            if (i != j) {
                degree[j] += mult;
            }
            fill(c + 1);
            degree[i] -= i == j ? 2 * mult : mult;
            if (i != j) {
                degree[j] -= mult;
            }
            m[i][j] = m[j][i] = 0;
        }
    };
    fill(0);
    return classes;
}

TrinionGraph k4()
{
    // vertices 0..3, every pair joined once
    return TrinionGraph(4, {{{0, 0}, {1, 0}},
                            {{0, 1}, {2, 0}},
                            {{0, 2}, {3, 0}},
                            {{1, 1}, {2, 1}},
                            {{1, 2}, {3, 1}},
                            {{2, 2}, {3, 2}}});
}

TrinionGraph relabel(const TrinionGraph& g, const std::vector<int>& vertex_perm,
                     const std::vector<std::array<int, 3>>& slot_perm)
{
    std::vector<std::pair<HalfEdge, HalfEdge>> edges;
    auto map = [&](HalfEdge h) {
        return HalfEdge{vertex_perm[h.vertex], slot_perm[h.vertex][h.slot]};
    };
    for (const auto& e : g.edges()) {
        edges.emplace_back(map(e.first), map(e.second));
    }
    return TrinionGraph(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("genus of small graphs")
{
    CHECK(TrinionGraph::theta().genus() == 2);
    CHECK(TrinionGraph::dumbbell().genus() == 2);
    CHECK(k4().genus() == 3);
}

TEST_CASE("invalid graphs are rejected")
{
    // two disjoint thetas would need 4 vertices; a disconnected pairing:
    CHECK_THROWS_AS(TrinionGraph(4, {{{0, 0}, {0, 1}},
                                     {{0, 2}, {1, 0}},
                                     {{1, 1}, {1, 2}},
                                     {{2, 0}, {2, 1}},
                                     {{2, 2}, {3, 0}},
                                     {{3, 1}, {3, 2}}}),
                    std::invalid_argument);
    // unpaired half-edge
    CHECK_THROWS_AS(TrinionGraph(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}), std::invalid_argument);
    // half-edge used twice
    CHECK_THROWS_AS(TrinionGraph(2, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}, {{0, 2}, {1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(TrinionGraph(2, {{{0, 0}, {1, 3}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("canonical_form is invariant under relabeling and separates genus-2 classes")
{
    const auto theta = TrinionGraph::theta();
    const auto dumbbell = TrinionGraph::dumbbell();
    CHECK(canonical_form(theta) != canonical_form(dumbbell));
    CHECK(canonical_form(theta).key == std::vector<int>{2, 0, 3, 0});
    CHECK(canonical_form(dumbbell).key == std::vector<int>{2, 1, 1, 1});

    std::mt19937 rng(7);
    for (const auto& g : {theta, dumbbell, k4()}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> vp(static_cast<std::size_t>(g.vertex_count()));
            std::iota(vp.begin(), vp.end(), 0);
            std::shuffle(vp.begin(), vp.end(), rng);
            std::vector<std::array<int, 3>> sp(vp.size(), {0, 1, 2});
            for (auto& s : sp) {
                std::shuffle(s.begin(), s.end(), rng);
            }
            CHECK(canonical_form(relabel(g, vp, sp)) == canonical_form(g));
        }
    }
}

TEST_CASE("canonical_labeling maps edges consistently")
{
    for (int genus = 2; genus <= 3; ++genus) {
        for (const auto& g : generate_genus_graphs(genus)) {
            std::vector<int> vp(static_cast<std::size_t>(g.vertex_count()));
            std::iota(vp.rbegin(), vp.rend(), 0);
            std::vector<std::array<int, 3>> sp(vp.size(), {2, 0, 1});
            const auto h = relabel(g, vp, sp);
            const auto lab = canonical_labeling(h);
            CHECK(lab.graph == g);  // generated graphs are already canonical
            std::vector<int> sorted = lab.edge_map;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> expect(static_cast<std::size_t>(g.edge_count()));
            std::iota(expect.begin(), expect.end(), 0);
            CHECK(sorted == expect);
            // endpoints of each edge land on the same canonical vertex pair multiset
            const auto adj = lab.graph.adjacency();
            for (int e = 0; e < h.edge_count(); ++e) {
                const auto& ce = lab.graph.edges()[lab.edge_map[e]];
                CHECK(adj[ce.first.vertex][ce.second.vertex] >= 1);
                CHECK(h.edges()[e].is_loop() == ce.is_loop());
            }
        }
    }
}

TEST_CASE("generate_genus_graphs")
{
    const auto g2 = generate_genus_graphs(2);
    REQUIRE(g2.size() == 2);
    std::set<std::string> names;
    for (const auto& g : g2) {
        names.insert(graph_name(g));
    }
    CHECK(names == std::set<std::string>{"theta", "dumbbell"});

    for (int genus = 2; genus <= 4; ++genus) {
        const auto graphs = generate_genus_graphs(genus);
        std::set<std::vector<int>> generated;
        for (const auto& g : graphs) {
            CHECK(g.vertex_count() == 2 * genus - 2);
            CHECK(g.edge_count() == 3 * genus - 3);
            CHECK(g.genus() == genus);
            generated.insert(naive_key(g.adjacency()));
        }
        CHECK(generated.size() == graphs.size());
        CHECK(generated == recount_classes(2 * genus - 2));
    }
    CHECK(generate_genus_graphs(3).size() == 5);
    CHECK(generate_genus_graphs(4).size() == 17);

    CHECK_THROWS_AS(generate_genus_graphs(1), std::invalid_argument);
    CHECK_THROWS_AS(generate_genus_graphs(5), std::invalid_argument);
}

TEST_CASE("generation is deterministic and sorted")
{
    const auto a = generate_genus_graphs(3);
    const auto b = generate_genus_graphs(3);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK(canonical_form(a[i - 1]) < canonical_form(a[i]));
    }
}

TEST_CASE("fusion_move on the theta graph")
{
    const auto theta = TrinionGraph::theta();
    // edge 0 joins [0,0]-[1,0]; a=[0,1], c=[1,1] are halves of one edge
    const auto moved = fusion_move(theta, 0, 0);
    CHECK(canonical_form(moved) == canonical_form(TrinionGraph::dumbbell()));
    const auto other = fusion_move(theta, 0, 1);
    CHECK(canonical_form(other) == canonical_form(theta));

    CHECK_THROWS_AS(fusion_move(TrinionGraph::dumbbell(), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(fusion_move(theta, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(fusion_move(theta, 3, 0), std::invalid_argument);
}

TEST_CASE("fusion_move preserves shape and is an involution per variant")
{
    for (int genus = 2; genus <= 3; ++genus) {
        for (const auto& g : generate_genus_graphs(genus)) {
            for (int e = 0; e < g.edge_count(); ++e) {
                if (g.edges()[e].is_loop()) {
                    continue;
                }
                for (int variant = 0; variant < 2; ++variant) {
                    const auto moved = fusion_move(g, e, variant);
                    CHECK(moved.genus() == genus);
                    CHECK(moved.vertex_count() == g.vertex_count());
                    const int back = moved.edge_of(g.edges()[e].first);
                    CHECK(canonical_form(fusion_move(moved, back, variant)) == canonical_form(g));
                }
            }
        }
    }
}

TEST_CASE("fusion moves connect all classes of a genus")
{
    for (int genus = 2; genus <= 3; ++genus) {
        const auto graphs = generate_genus_graphs(genus);
        std::set<CanonicalForm> all;
        for (const auto& g : graphs) {
            all.insert(canonical_form(g));
        }
        std::set<CanonicalForm> reached{canonical_form(graphs[0])};
        std::queue<TrinionGraph> queue;
        queue.push(graphs[0]);
        while (!queue.empty()) {
            const auto g = queue.front();
            queue.pop();
            for (int e = 0; e < g.edge_count(); ++e) {
                if (g.edges()[e].is_loop()) {
                    continue;
                }
                for (int variant = 0; variant < 2; ++variant) {
                    const auto h = fusion_move(g, e, variant);
                    if (reached.insert(canonical_form(h)).second) {
                        queue.push(h);
                    }
                }
            }
        }
        CHECK(reached == all);
    }
}

TEST_CASE("canonical_form size cap")
{
    // a ring of 7 thetas-with-a-cut would exceed nothing; build a 14-vertex ladder instead
    const int n = 14;
    std::vector<std::pair<HalfEdge, HalfEdge>> edges;
    const int half = n / 2;
    for (int i = 0; i < half; ++i) {
        edges.push_back({{i, 0}, {(i + 1) % half, 1}});
        edges.push_back({{half + i, 0}, {half + (i + 1) % half, 1}});
        edges.push_back({{i, 2}, {half + i, 2}});
    }
    const TrinionGraph prism(n, edges);
    CHECK(prism.genus() == 8);
    CHECK_THROWS_AS(canonical_form(prism), std::invalid_argument);
}
