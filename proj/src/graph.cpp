#include "verlinde/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace verlinde {

namespace {

bool mate_is_connected(int vertex_count, const std::vector<int>& mate)
{
    if (vertex_count == 0) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int s = 0; s < 3; ++s) {
            const int w = mate[3 * v + s] / 3;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count;
}

void validate_mate(int vertex_count, const std::vector<int>& mate)
{
    if (vertex_count <= 0 || vertex_count % 2 != 0) {
        throw std::invalid_argument("trinion graph needs a positive even vertex count, got " +
                                    std::to_string(vertex_count));
    }
    const int n = 3 * vertex_count;
    if (static_cast<int>(mate.size()) != n) {
        throw std::invalid_argument("half-edge pairing has wrong size");
    }
    for (int h = 0; h < n; ++h) {
        const int m = mate[h];
        if (m < 0 || m >= n) {
            throw std::invalid_argument("half-edge " + std::to_string(h) + " is unpaired");
        }
        if (m == h || mate[m] != h) {
            throw std::invalid_argument("half-edge pairing is not a fixed-point-free involution");
        }
    }
    if (!mate_is_connected(vertex_count, mate)) {
        throw std::invalid_argument("trinion graph is not connected");
    }
}

// Key layout: [V, row 0, row 1, ...] where row i = M[p_i][p_0..p_i].
class Canonicalizer {
public:
    explicit Canonicalizer(std::vector<std::vector<int>> adjacency)
        : adj_(std::move(adjacency)), n_(static_cast<int>(adj_.size()))
    {
        used_.assign(static_cast<std::size_t>(n_), 0);
        perm_.reserve(static_cast<std::size_t>(n_));
        current_.reserve(static_cast<std::size_t>(n_ * (n_ + 1) / 2));
    }

    void run()
    {
        search(0, false);
    }

    const std::vector<int>& best() const { return best_; }
    const std::vector<int>& best_perm() const { return best_perm_; }

private:
    void search(int depth, bool strictly_less)
    {
        if (depth == n_) {
            if (best_.empty() || strictly_less) {
                best_ = current_;
                best_perm_ = perm_;
                ++generation_;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) {
                continue;
            }
            const std::size_t mark = current_.size();
            for (int j = 0; j < depth; ++j) {
                current_.push_back(adj_[v][perm_[j]]);
            }
            current_.push_back(adj_[v][v]);

            bool less = strictly_less;
            bool prune = false;
            if (!best_.empty() && !strictly_less) {
                for (std::size_t i = mark; i < current_.size(); ++i) {
                    if (current_[i] < best_[i]) {
                        less = true;
                        break;
                    }
                    if (current_[i] > best_[i]) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) {
                const auto before = generation_;
                used_[v] = 1;
                perm_.push_back(v);
                search(depth + 1, less);
                perm_.pop_back();
                used_[v] = 0;
                // A new best extends the current prefix, so the prefix is no longer smaller.
                if (generation_ != before) {
                    strictly_less = false;
                }
            }
            current_.resize(mark);
        }
    }

    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<char> used_;
    std::vector<int> perm_;
    std::vector<int> current_;
    std::vector<int> best_;
    std::vector<int> best_perm_;
    std::uint64_t generation_ = 0;
};

// best_perm[i] = original vertex placed at canonical position i
std::pair<CanonicalForm, std::vector<int>> minimize(const TrinionGraph& g)
{
    if (g.vertex_count() > kMaxCanonicalVertices) {
        throw std::invalid_argument("canonical_form supports at most " +
                                    std::to_string(kMaxCanonicalVertices) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
    }
    Canonicalizer c(g.adjacency());
    c.run();
    CanonicalForm form;
    form.key.push_back(g.vertex_count());
    form.key.insert(form.key.end(), c.best().begin(), c.best().end());
    return {std::move(form), c.best_perm()};
}

void enumerate_matchings(std::vector<int>& mate, int vertex_count,
                         std::set<CanonicalForm>& seen, std::vector<TrinionGraph>& out)
{
    const int n = static_cast<int>(mate.size());
    int h = 0;
    while (h < n && mate[h] >= 0) {
        ++h;
    }
    if (h == n) {
        if (!mate_is_connected(vertex_count, mate)) {
            return;
        }
        std::vector<std::pair<HalfEdge, HalfEdge>> edges;
        for (int x = 0; x < n; ++x) {
            if (x < mate[x]) {
                edges.emplace_back(HalfEdge::from_id(x), HalfEdge::from_id(mate[x]));
            }
        }
        TrinionGraph g(vertex_count, edges);
        auto labeled = canonical_labeling(g);
        if (seen.insert(labeled.form).second) {
            out.push_back(std::move(labeled.graph));
        }
        return;
    }
    // Unpaired slots of one vertex are interchangeable: only try the lowest one.
    for (int v = h / 3; v < vertex_count; ++v) {
        for (int s = 0; s < 3; ++s) {
            const int partner = 3 * v + s;
            if (partner == h || mate[partner] >= 0) {
                continue;
            }
            mate[h] = partner;
            mate[partner] = h;
            enumerate_matchings(mate, vertex_count, seen, out);
            mate[h] = -1;
            mate[partner] = -1;
            break;
        }
    }
}

}  // namespace

TrinionGraph::TrinionGraph(int vertex_count,
                           const std::vector<std::pair<HalfEdge, HalfEdge>>& edges)
    : vertex_count_(vertex_count)
{
    if (vertex_count <= 0) {
        throw std::invalid_argument("trinion graph needs a positive vertex count");
    }
    mate_.assign(static_cast<std::size_t>(3 * vertex_count), -1);
    for (const auto& [x, y] : edges) {
        for (const HalfEdge h : {x, y}) {
            if (h.vertex < 0 || h.vertex >= vertex_count || h.slot < 0 || h.slot > 2) {
                throw std::invalid_argument("half-edge [" + std::to_string(h.vertex) + "," +
                                            std::to_string(h.slot) + "] out of range");
            }
        }
        if (mate_[x.id()] >= 0 || mate_[y.id()] >= 0 || x == y) {
            throw std::invalid_argument("half-edge used by more than one edge");
        }
        mate_[x.id()] = y.id();
        mate_[y.id()] = x.id();
    }
    validate_mate(vertex_count_, mate_);
    index_edges();
}

TrinionGraph::TrinionGraph(int vertex_count, std::vector<int> mate)
    : vertex_count_(vertex_count), mate_(std::move(mate))
{
    validate_mate(vertex_count_, mate_);
    index_edges();
}

void TrinionGraph::index_edges()
{
    edges_.clear();
    edge_of_.assign(mate_.size(), -1);
    for (int h = 0; h < static_cast<int>(mate_.size()); ++h) {
        if (h < mate_[h]) {
            edge_of_[h] = edge_of_[mate_[h]] = static_cast<int>(edges_.size());
            edges_.push_back({HalfEdge::from_id(h), HalfEdge::from_id(mate_[h])});
        }
    }
}

TrinionGraph TrinionGraph::theta()
{
    return TrinionGraph(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
}

TrinionGraph TrinionGraph::dumbbell()
{
    return TrinionGraph(2, {{{0, 0}, {0, 1}}, {{0, 2}, {1, 0}}, {{1, 1}, {1, 2}}});
}

std::array<int, 3> TrinionGraph::incident_edges(int v) const
{
    return {edge_of_[3 * v], edge_of_[3 * v + 1], edge_of_[3 * v + 2]};
}

std::vector<std::vector<int>> TrinionGraph::adjacency() const
{
    const auto n = static_cast<std::size_t>(vertex_count_);
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const Edge& e : edges_) {
        const int u = e.first.vertex;
        const int v = e.second.vertex;
        if (u == v) {
            ++m[u][u];
        } else {
            ++m[u][v];
            ++m[v][u];
        }
    }
    return m;
}

CanonicalForm canonical_form(const TrinionGraph& g)
{
    return minimize(g).first;
}

CanonicalLabeling canonical_labeling(const TrinionGraph& g)
{
    auto [form, perm] = minimize(g);
    const int n = g.vertex_count();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        position[perm[i]] = i;
    }

    // Old edges grouped by canonical endpoint pair, in original edge order.
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = position[g.edges()[e].first.vertex];
        int b = position[g.edges()[e].second.vertex];
        if (a > b) {
            std::swap(a, b);
        }
        by_pair[{a, b}].push_back(e);
    }

    std::vector<int> next_slot(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<HalfEdge, HalfEdge>> edges;
    std::vector<std::pair<int, HalfEdge>> old_to_half;  // old edge -> first half in new graph
    for (const auto& [endpoints, olds] : by_pair) {
        for (const int old : olds) {
            const HalfEdge x{endpoints.first, next_slot[endpoints.first]++};
            const HalfEdge y{endpoints.second, next_slot[endpoints.second]++};
            edges.emplace_back(x, y);
            old_to_half.emplace_back(old, x);
        }
    }
    TrinionGraph canon(n, edges);
    std::vector<int> edge_map(static_cast<std::size_t>(g.edge_count()), -1);
    for (const auto& [old, half] : old_to_half) {
        edge_map[old] = canon.edge_of(half);
    }
    return {std::move(form), std::move(canon), std::move(edge_map)};
}

static std::vector<TrinionGraph> generate_uncached(int genus)
{
    const int vertex_count = 2 * genus - 2;
    std::vector<int> mate(static_cast<std::size_t>(3 * vertex_count), -1);
    std::set<CanonicalForm> seen;
    std::vector<TrinionGraph> out;
    enumerate_matchings(mate, vertex_count, seen, out);
    std::sort(out.begin(), out.end(), [](const TrinionGraph& a, const TrinionGraph& b) {
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

std::vector<TrinionGraph> generate_genus_graphs(int genus)
{
    if (genus < 2 || genus > 4) {
        throw std::invalid_argument("generate_genus_graphs supports 2 <= g <= 4, got " +
                                    std::to_string(genus));
    }
    static std::mutex mutex;
    static std::map<int, std::vector<TrinionGraph>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(genus);
    if (it == cache.end()) {
        it = cache.emplace(genus, generate_uncached(genus)).first;
    }
    return it->second;
}

TrinionGraph fusion_move(const TrinionGraph& g, int edge, int variant)
{
    if (edge < 0 || edge >= g.edge_count()) {
        throw std::invalid_argument("fusion_move: edge index " + std::to_string(edge) +
                                    " out of range");
    }
    if (variant != 0 && variant != 1) {
        throw std::invalid_argument("fusion_move: variant must be 0 or 1");
    }
    const Edge& e = g.edges()[edge];
    if (e.is_loop()) {
        throw std::invalid_argument("fusion_move: edge " + std::to_string(edge) + " is a loop");
    }
    auto others = [](HalfEdge h) {
        std::array<int, 2> out{};
        int i = 0;
        for (int s = 0; s < 3; ++s) {
            if (s != h.slot) {
                out[i++] = 3 * h.vertex + s;
            }
        }
        return out;
    };
    const auto [a, b] = others(e.first);
    const auto [c, d] = others(e.second);
    (void)a;
    // Moving b into the other endpoint's slot of c (or d) regroups the four ends.
    const int x = b;
    const int y = variant == 0 ? c : d;
    auto sigma = [x, y](int h) { return h == x ? y : (h == y ? x : h); };

    std::vector<int> mate(g.mate_.size());
    for (int h = 0; h < static_cast<int>(mate.size()); ++h) {
        mate[sigma(h)] = sigma(g.mate_[h]);
    }
    return TrinionGraph(g.vertex_count(), std::move(mate));
}

std::string graph_name(const TrinionGraph& g)
{
    const int genus = g.genus();
    if (genus == 2) {
        const auto adj = g.adjacency();
        return adj[0][0] == 0 ? "theta" : "dumbbell";
    }
    if (genus >= 3 && genus <= 4) {
        const auto key = canonical_form(g);
        const auto all = generate_genus_graphs(genus);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (canonical_form(all[i]) == key) {
                return "g" + std::to_string(genus) + "-" + std::to_string(i);
            }
        }
    }
    return "g" + std::to_string(genus);
}

}  // namespace verlinde
