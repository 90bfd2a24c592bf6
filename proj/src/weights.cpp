#include "verlinde/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "verlinde/parallel.hpp"

namespace verlinde {

namespace {

void require_level(int level)
{
    if (level < 0) {
        throw std::invalid_argument("level must be non-negative, got " + std::to_string(level));
    }
}

void require_state_budget(const TrinionGraph& g, int level, const EnumerationLimits& limits)
{
    const auto states = saturating_pow(static_cast<std::uint64_t>(level) + 1,
                                       static_cast<std::uint64_t>(g.edge_count()));
    if (states > limits.max_states) {
        throw BudgetExceeded("brute-force enumeration needs (k+1)^E = " +
                             std::to_string(level + 1) + "^" + std::to_string(g.edge_count()) +
                             " states, above --max-states " + std::to_string(limits.max_states) +
                             "; use count_via_contraction instead");
    }
}

// Depth-first labeling over edges in a vertex-connected order. A vertex is
// tested as soon as its last incident edge receives a label; partial label
// sums above 2k are cut immediately.
class LabelSearch {
public:
    LabelSearch(const TrinionGraph& g, int level) : g_(g), level_(level)
    {
        const int n_edges = g.edge_count();
        std::vector<char> placed(static_cast<std::size_t>(n_edges), 0);
        std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<int> queue{0};
        visited[0] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            for (const int e : g.incident_edges(v)) {
                if (!placed[e]) {
                    placed[e] = 1;
                    order_.push_back(e);
                }
                const Edge& edge = g.edges()[e];
                for (const int w : {edge.first.vertex, edge.second.vertex}) {
                    if (!visited[w]) {
                        visited[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }

        std::vector<int> position(static_cast<std::size_t>(n_edges));
        for (int t = 0; t < n_edges; ++t) {
            position[order_[t]] = t;
        }
        completes_at_.assign(static_cast<std::size_t>(n_edges), {});
        touches_at_.assign(static_cast<std::size_t>(n_edges), {});
        for (int v = 0; v < g.vertex_count(); ++v) {
            int last = 0;
            for (const int e : g.incident_edges(v)) {
                last = std::max(last, position[e]);
                auto& touched = touches_at_[position[e]];
                if (std::find(touched.begin(), touched.end(), v) == touched.end()) {
                    touched.push_back(v);
                }
            }
            completes_at_[last].push_back(v);
        }
        labels_.assign(static_cast<std::size_t>(n_edges), -1);
    }

    /// Runs the search with the first edge in search order pinned to `first_label`.
    void run(int first_label, const std::function<void(const std::vector<int>&)>& visit)
    {
        std::fill(labels_.begin(), labels_.end(), -1);
        visit_ = &visit;
        assign(0, first_label);
    }

    int edge_count() const { return static_cast<int>(order_.size()); }

private:
    void assign(int t, int label)
    {
        const int e = order_[t];
        labels_[e] = label;
        if (consistent(t)) {
            if (t + 1 == edge_count()) {
                (*visit_)(labels_);
            } else {
                for (int next = 0; next <= level_; ++next) {
                    assign(t + 1, next);
                }
            }
        }
        labels_[e] = -1;
    }

    bool consistent(int t) const
    {
        for (const int v : completes_at_[t]) {
            const auto inc = g_.incident_edges(v);
            if (!vertex_admissible(level_, labels_[inc[0]], labels_[inc[1]], labels_[inc[2]])) {
                return false;
            }
        }
        for (const int v : touches_at_[t]) {
            int partial = 0;
            for (const int e : g_.incident_edges(v)) {
                if (labels_[e] >= 0) {
                    partial += labels_[e];
                }
            }
            if (partial > 2 * level_) {
                return false;
            }
        }
        return true;
    }

    const TrinionGraph& g_;
    int level_;
    std::vector<int> order_;
    std::vector<std::vector<int>> completes_at_;
    std::vector<std::vector<int>> touches_at_;
    std::vector<int> labels_;
    const std::function<void(const std::vector<int>&)>* visit_ = nullptr;
};

struct Factor {
    std::vector<int> vars;  // sorted edge ids
    std::vector<BigInt> data;
};

std::size_t table_size(int radix, std::size_t n_vars)
{
    std::size_t size = 1;
    for (std::size_t i = 0; i < n_vars; ++i) {
        size *= static_cast<std::size_t>(radix);
    }
    return size;
}

Factor vertex_factor(const TrinionGraph& g, int v, int level)
{
    const auto inc = g.incident_edges(v);
    Factor f;
    f.vars.assign(inc.begin(), inc.end());
    std::sort(f.vars.begin(), f.vars.end());
    f.vars.erase(std::unique(f.vars.begin(), f.vars.end()), f.vars.end());

    const int radix = level + 1;
    const std::size_t size = table_size(radix, f.vars.size());
    f.data.assign(size, 0);
    std::vector<int> value(f.vars.size(), 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = f.vars.size(); i-- > 0;) {
            value[i] = static_cast<int>(rest % static_cast<std::size_t>(radix));
            rest /= static_cast<std::size_t>(radix);
        }
        auto label_of = [&](int e) {
            const auto it = std::find(f.vars.begin(), f.vars.end(), e);
            return value[static_cast<std::size_t>(it - f.vars.begin())];
        };
        if (vertex_admissible(level, label_of(inc[0]), label_of(inc[1]), label_of(inc[2]))) {
            f.data[idx] = 1;
        }
    }
    return f;
}

// Multiplies the given factors and sums out `var`.
Factor eliminate(const std::vector<const Factor*>& factors, int var, int radix)
{
    std::vector<int> all;
    for (const Factor* f : factors) {
        all.insert(all.end(), f->vars.begin(), f->vars.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    Factor out;
    for (const int v : all) {
        if (v != var) {
            out.vars.push_back(v);
        }
    }
    out.data.assign(table_size(radix, out.vars.size()), 0);

    // stride of each position of `all` inside each factor and inside `out`
    const std::size_t n = all.size();
    std::vector<std::vector<std::size_t>> strides(factors.size(),
                                                  std::vector<std::size_t>(n, 0));
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const auto& vars = factors[fi]->vars;
        std::size_t stride = 1;
        for (std::size_t i = vars.size(); i-- > 0;) {
            const auto pos = std::lower_bound(all.begin(), all.end(), vars[i]) - all.begin();
            strides[fi][static_cast<std::size_t>(pos)] = stride;
            stride *= static_cast<std::size_t>(radix);
        }
    }
    std::vector<std::size_t> out_stride(n, 0);
    {
        std::size_t stride = 1;
        for (std::size_t i = n; i-- > 0;) {
            if (all[i] != var) {
                out_stride[i] = stride;
                stride *= static_cast<std::size_t>(radix);
            }
        }
    }

    std::vector<int> digit(n, 0);
    std::vector<std::size_t> index(factors.size(), 0);
    std::size_t out_index = 0;
    const std::size_t total = table_size(radix, n);
    BigInt product;
    for (std::size_t step = 0; step < total; ++step) {
        bool zero = false;
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
            if (factors[fi]->data[index[fi]].is_zero()) {
                zero = true;
                break;
            }
        }
        if (!zero) {
            product = factors[0]->data[index[0]];
            for (std::size_t fi = 1; fi < factors.size(); ++fi) {
                product *= factors[fi]->data[index[fi]];
            }
            out.data[out_index] += product;
        }
        // odometer increment, last position fastest
        for (std::size_t i = n; i-- > 0;) {
            if (++digit[i] < radix) {
                for (std::size_t fi = 0; fi < factors.size(); ++fi) {
                    index[fi] += strides[fi][i];
                }
                out_index += out_stride[i];
                break;
            }
            for (std::size_t fi = 0; fi < factors.size(); ++fi) {
                index[fi] -= strides[fi][i] * static_cast<std::size_t>(radix - 1);
            }
            out_index -= out_stride[i] * static_cast<std::size_t>(radix - 1);
            digit[i] = 0;
        }
    }
    return out;
}

}  // namespace

ThetaLabel::ThetaLabel(const TrinionGraph& g, WeightAssignment w) : weights_(std::move(w))
{
    if (!is_admissible(g, weights_)) {
        throw std::invalid_argument("weight assignment is not admissible");
    }
}

bool vertex_admissible(int level, int a, int b, int c)
{
    const int sum = a + b + c;
    return sum % 2 == 0 && sum <= 2 * level && a <= b + c && b <= a + c && c <= a + b;
}

bool is_admissible(const TrinionGraph& g, const WeightAssignment& w)
{
    if (static_cast<int>(w.labels.size()) != g.edge_count()) {
        throw std::invalid_argument("weight assignment has " + std::to_string(w.labels.size()) +
                                    " labels for a graph with " +
                                    std::to_string(g.edge_count()) + " edges");
    }
    require_level(w.level);
    for (const int j : w.labels) {
        if (j < 0 || j > w.level) {
            return false;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.incident_edges(v);
        if (!vertex_admissible(w.level, w.labels[inc[0]], w.labels[inc[1]], w.labels[inc[2]])) {
            return false;
        }
    }
    return true;
}

std::vector<WeightAssignment> enumerate_admissible(const TrinionGraph& g, int level,
                                                   const EnumerationLimits& limits)
{
    require_level(level);
    require_state_budget(g, level, limits);

    std::vector<std::vector<WeightAssignment>> shards(static_cast<std::size_t>(level) + 1);
    parallel_for(shards.size(), [&](std::size_t first) {
        LabelSearch search(g, level);
        search.run(static_cast<int>(first), [&](const std::vector<int>& labels) {
            shards[first].push_back({level, labels});
        });
    });
    std::vector<WeightAssignment> out;
    for (auto& shard : shards) {
        out.insert(out.end(), std::make_move_iterator(shard.begin()),
                   std::make_move_iterator(shard.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_admissible_bruteforce(const TrinionGraph& g, int level,
                                   const EnumerationLimits& limits)
{
    require_level(level);
    require_state_budget(g, level, limits);

    std::vector<std::uint64_t> shards(static_cast<std::size_t>(level) + 1, 0);
    parallel_for(shards.size(), [&](std::size_t first) {
        LabelSearch search(g, level);
        search.run(static_cast<int>(first), [&](const std::vector<int>&) { ++shards[first]; });
    });
    BigInt total = 0;
    for (const auto n : shards) {
        total += n;
    }
    return total;
}

BigInt count_via_contraction(const TrinionGraph& g, int level, const EnumerationLimits& limits)
{
    require_level(level);
    const int radix = level + 1;

    std::vector<Factor> factors;
    for (int v = 0; v < g.vertex_count(); ++v) {
        factors.push_back(vertex_factor(g, v, level));
    }

    std::vector<int> remaining(static_cast<std::size_t>(g.edge_count()));
    std::iota(remaining.begin(), remaining.end(), 0);
    while (!remaining.empty()) {
        int best_var = -1;
        std::size_t best_width = 0;
        for (const int var : remaining) {
            std::vector<int> all;
            for (const Factor& f : factors) {
                if (std::binary_search(f.vars.begin(), f.vars.end(), var)) {
                    all.insert(all.end(), f.vars.begin(), f.vars.end());
                }
            }
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            if (best_var < 0 || all.size() < best_width) {
                best_var = var;
                best_width = all.size();
            }
        }
        const auto required = saturating_pow(static_cast<std::uint64_t>(radix), best_width);
        if (required > limits.max_frontier) {
            throw BudgetExceeded("contraction needs a tensor of " + std::to_string(radix) + "^" +
                                 std::to_string(best_width) + " = " + std::to_string(required) +
                                 " entries, above --max-frontier " +
                                 std::to_string(limits.max_frontier));
        }

        std::vector<const Factor*> involved;
        std::vector<Factor> kept;
        for (const Factor& f : factors) {
            if (std::binary_search(f.vars.begin(), f.vars.end(), best_var)) {
                involved.push_back(&f);
            }
        }
        Factor merged = eliminate(involved, best_var, radix);
        for (Factor& f : factors) {
            if (!std::binary_search(f.vars.begin(), f.vars.end(), best_var)) {
                kept.push_back(std::move(f));
            }
        }
        kept.push_back(std::move(merged));
        factors = std::move(kept);
        remaining.erase(std::find(remaining.begin(), remaining.end(), best_var));
    }

    BigInt total = 1;
    for (const Factor& f : factors) {
        total *= f.data.at(0);
    }
    return total;
}

std::vector<ThetaLabel> theta_basis(const TrinionGraph& g, int level,
                                    const EnumerationLimits& limits)
{
    std::vector<ThetaLabel> out;
    for (auto& w : enumerate_admissible(g, level, limits)) {
        out.emplace_back(g, std::move(w));
    }
    return out;
}

Rational weight_value(int label, int level)
{
    return level == 0 ? Rational(0) : Rational(label, 2 * level);
}

Rational action_coordinate(int label, int level)
{
    return level == 0 ? Rational(0) : Rational(label, level);
}

int parity_rank(const TrinionGraph& g)
{
    const int n_edges = g.edge_count();
    std::vector<std::vector<char>> rows;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> row(static_cast<std::size_t>(n_edges), 0);
        for (const int e : g.incident_edges(v)) {
            row[e] ^= 1;
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n_edges && rank < static_cast<int>(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [col](const auto& r) { return r[col] != 0; });
        if (pivot == rows.end()) {
            continue;
        }
        std::swap(*pivot, rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) != rank && rows[r][col]) {
                for (int c = 0; c < n_edges; ++c) {
                    rows[r][c] ^= rows[rank][c];
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace verlinde
