#include "verlinde/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "verlinde/parallel.hpp"
#include "verlinde/weights.hpp"

namespace verlinde {

namespace {

using Row = Inequality;

bool row_less(const Row& x, const Row& y)
{
    if (x.coeffs != y.coeffs) {
        return std::lexicographical_compare(x.coeffs.begin(), x.coeffs.end(), y.coeffs.begin(),
                                            y.coeffs.end());
    }
    return x.bound < y.bound;
}

// Recursive facet integration:
//   vol_d(P) = (1/d) sum_i b_i / |a_ik| * vol_{d-1}(facet_i projected off x_k).
// Rows are scaled so the pivot coefficient has |a_ik| = 1; facets with b_i = 0
// contribute nothing and are skipped. Subproblems are memoized by their
// normalized row set, since one face is reached along many facet orders.
class LasserreVolume {
public:
    Rational volume(std::vector<Row> rows, int dim)
    {
        if (!normalize(rows)) {
            return 0;
        }
        if (dim == 1) {
            return interval_length(rows);
        }

        std::string key = std::to_string(dim);
        for (const Row& r : rows) {
            key += '|';
            for (const auto& a : r.coeffs) {
                key += a.str();
                key += ',';
            }
            key += r.bound.str();
        }
        if (const auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }

        Rational total = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Row& facet = rows[i];
            if (facet.bound == 0) {
                continue;
            }
            const auto pivot = static_cast<std::size_t>(
                std::find_if(facet.coeffs.begin(), facet.coeffs.end(),
                             [](const Rational& a) { return a != 0; }) -
                facet.coeffs.begin());
            // Substitute x_pivot = (b_i - sum_{j != pivot} a_ij x_j) / a_i,pivot.
            const Rational& ap = facet.coeffs[pivot];
            std::vector<Row> sub;
            sub.reserve(rows.size() - 1);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == i) {
                    continue;
                }
                const Rational factor = rows[r].coeffs[pivot] / ap;
                Row out;
                out.coeffs.reserve(static_cast<std::size_t>(dim - 1));
                for (std::size_t j = 0; j < rows[r].coeffs.size(); ++j) {
                    if (j != pivot) {
                        out.coeffs.push_back(rows[r].coeffs[j] - factor * facet.coeffs[j]);
                    }
                }
                out.bound = rows[r].bound - factor * facet.bound;
                sub.push_back(std::move(out));
            }
            total += facet.bound / abs(ap) * volume(std::move(sub), dim - 1);
        }
        total /= dim;
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    // Scales rows to a unit leading coefficient, drops satisfied constant rows
    // and duplicates. Returns false if some constant row is infeasible.
    static bool normalize(std::vector<Row>& rows)
    {
        std::vector<Row> out;
        out.reserve(rows.size());
        for (Row& r : rows) {
            const auto lead = std::find_if(r.coeffs.begin(), r.coeffs.end(),
                                           [](const Rational& a) { return a != 0; });
            if (lead == r.coeffs.end()) {
                if (r.bound < 0) {
                    return false;
                }
                continue;
            }
            const Rational scale = abs(*lead);
            if (scale != 1) {
                for (auto& a : r.coeffs) {
                    a /= scale;
                }
                r.bound /= scale;
            }
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(), row_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        rows = std::move(out);
        return true;
    }

    static Rational interval_length(const std::vector<Row>& rows)
    {
        std::optional<Rational> lo;
        std::optional<Rational> hi;
        for (const Row& r : rows) {
            const Rational x = r.bound / r.coeffs[0];
            if (r.coeffs[0] > 0) {
                hi = hi ? std::min(*hi, x) : x;
            } else {
                lo = lo ? std::max(*lo, x) : x;
            }
        }
        if (!lo || !hi) {
            throw std::invalid_argument("exact_volume: polytope is unbounded");
        }
        return *hi > *lo ? Rational(*hi - *lo) : Rational(0);
    }

    std::map<std::string, Rational> memo_;
};

Inequality make_row(int dim)
{
    return {std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)), Rational(0)};
}

void push_unique(std::vector<Inequality>& rows, Inequality row)
{
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
        rows.push_back(std::move(row));
    }
}

}  // namespace

ClebschGordanPolytope ClebschGordanPolytope::unit_cube(int dim)
{
    ClebschGordanPolytope p;
    p.dim = dim;
    for (int e = 0; e < dim; ++e) {
        auto lower = make_row(dim);
        lower.coeffs[e] = -1;
        p.ineqs.push_back(std::move(lower));
        auto upper = make_row(dim);
        upper.coeffs[e] = 1;
        upper.bound = 1;
        p.ineqs.push_back(std::move(upper));
    }
    return p;
}

ClebschGordanPolytope build_polytope(const TrinionGraph& g)
{
    ClebschGordanPolytope p = ClebschGordanPolytope::unit_cube(g.edge_count());
    const int d = p.dim;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.incident_edges(v);
        for (int x = 0; x < 3; ++x) {
            auto tri = make_row(d);
            for (int y = 0; y < 3; ++y) {
                tri.coeffs[inc[y]] += (y == x) ? 1 : -1;
            }
            push_unique(p.ineqs, std::move(tri));
        }
        auto sum = make_row(d);
        for (const int e : inc) {
            sum.coeffs[e] += 1;
        }
        sum.bound = 2;
        push_unique(p.ineqs, std::move(sum));
    }
    return p;
}

bool contains(const ClebschGordanPolytope& p, const std::vector<Rational>& point)
{
    if (static_cast<int>(point.size()) != p.dim) {
        throw std::invalid_argument("contains: point has dimension " +
                                    std::to_string(point.size()) + ", polytope has " +
                                    std::to_string(p.dim));
    }
    for (const Inequality& row : p.ineqs) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < point.size(); ++i) {
            lhs += row.coeffs[i] * point[i];
        }
        if (lhs > row.bound) {
            return false;
        }
    }
    return true;
}

Rational exact_volume(const ClebschGordanPolytope& p)
{
    if (p.dim > kMaxExactVolumeDim) {
        throw std::invalid_argument("exact_volume supports dimension <= " +
                                    std::to_string(kMaxExactVolumeDim) + ", got " +
                                    std::to_string(p.dim) + "; use mc_volume");
    }
    if (p.dim <= 0) {
        throw std::invalid_argument("exact_volume: dimension must be positive");
    }
    LasserreVolume solver;
    return solver.volume(p.ineqs, p.dim);
}

MonteCarloVolume mc_volume(const ClebschGordanPolytope& p, std::uint64_t samples,
                           std::uint64_t seed)
{
    if (samples < 1000) {
        throw std::invalid_argument("mc_volume needs at least 1000 samples");
    }
    const auto d = static_cast<std::size_t>(p.dim);
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (const Inequality& row : p.ineqs) {
        std::vector<double> coeffs;
        for (const auto& c : row.coeffs) {
            coeffs.push_back(to_double(c));
        }
        a.push_back(std::move(coeffs));
        b.push_back(to_double(row.bound));
    }

    constexpr std::size_t kShards = 64;
    std::vector<std::uint64_t> hits(kShards, 0);
    parallel_for(kShards, [&](std::size_t shard) {
        const std::uint64_t n = samples / kShards + (shard < samples % kShards ? 1 : 0);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(shard)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<double> x(d);
        std::uint64_t inside = 0;
        for (std::uint64_t s = 0; s < n; ++s) {
            for (auto& xi : x) {
                xi = unit(rng);
            }
            bool ok = true;
            for (std::size_t r = 0; r < a.size() && ok; ++r) {
                double lhs = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    lhs += a[r][i] * x[i];
                }
                ok = lhs <= b[r];
            }
            inside += ok ? 1 : 0;
        }
        hits[shard] = inside;
    });

    MonteCarloVolume out;
    out.samples = samples;
    for (const auto h : hits) {
        out.hits += h;
    }
    const double n = static_cast<double>(samples);
    const double frac = static_cast<double>(out.hits) / n;
    out.estimate = frac;
    out.standard_error = std::sqrt(frac * (1.0 - frac) / n);
    return out;
}

BigInt lattice_count(const ClebschGordanPolytope& p, const TrinionGraph& g, int level,
                     std::uint64_t max_points)
{
    if (level < 1) {
        throw std::invalid_argument("lattice_count requires k >= 1");
    }
    if (p.dim != g.edge_count()) {
        throw std::invalid_argument("lattice_count: polytope dimension does not match graph");
    }
    const auto points = saturating_pow(static_cast<std::uint64_t>(level) + 1,
                                       static_cast<std::uint64_t>(p.dim));
    if (points > max_points) {
        throw BudgetExceeded("lattice_count would scan " + std::to_string(points) +
                             " points, above the budget of " + std::to_string(max_points));
    }

    // a.(j/k) <= b  <=>  (L a).j <= (L b) k with L clearing all denominators.
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::int64_t> b;
    for (const Inequality& row : p.ineqs) {
        BigInt lcm = boost::multiprecision::denominator(row.bound);
        for (const auto& c : row.coeffs) {
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
        }
        std::vector<std::int64_t> coeffs;
        for (const auto& c : row.coeffs) {
            coeffs.push_back((boost::multiprecision::numerator(c) * lcm /
                              boost::multiprecision::denominator(c))
                                 .convert_to<std::int64_t>());
        }
        a.push_back(std::move(coeffs));
        b.push_back((boost::multiprecision::numerator(row.bound) * lcm /
                     boost::multiprecision::denominator(row.bound) * level)
                        .convert_to<std::int64_t>());
    }

    const auto d = static_cast<std::size_t>(p.dim);
    std::vector<int> j(d, 0);
    std::uint64_t count = 0;
    while (true) {
        bool inside = true;
        for (std::size_t r = 0; r < a.size() && inside; ++r) {
            std::int64_t lhs = 0;
            for (std::size_t i = 0; i < d; ++i) {
                lhs += a[r][i] * j[i];
            }
            inside = lhs <= b[r];
        }
        for (int v = 0; v < g.vertex_count() && inside; ++v) {
            int parity = 0;
            for (const int e : g.incident_edges(v)) {
                parity += j[e];
            }
            inside = parity % 2 == 0;
        }
        count += inside ? 1 : 0;

        std::size_t i = d;
        while (i > 0 && j[i - 1] == level) {
            j[--i] = 0;
        }
        if (i == 0) {
            break;
        }
        ++j[i - 1];
    }
    return BigInt(count);
}

AsymptoticReport asymptotic_table(const TrinionGraph& g, int k_max)
{
    if (k_max < 1) {
        throw std::invalid_argument("asymptotic_table requires k_max >= 1");
    }
    const ClebschGordanPolytope p = build_polytope(g);
    AsymptoticReport report;
    for (int k = 1; k <= k_max; ++k) {
        AsymptoticRow row;
        row.level = k;
        row.count = lattice_count(p, g, k);
        row.ratio = Rational(row.count) / Rational(boost::multiprecision::pow(BigInt(k), p.dim));
        report.rows.push_back(std::move(row));
    }

    if (report.rows.size() >= 3) {
        // Quadratic in h = 1/k through the last three rows, evaluated at h = 0.
        const auto n = report.rows.size();
        Rational limit = 0;
        for (std::size_t i = n - 3; i < n; ++i) {
            const Rational hi(1, report.rows[i].level);
            Rational weight = 1;
            for (std::size_t m = n - 3; m < n; ++m) {
                if (m != i) {
                    const Rational hm(1, report.rows[m].level);
                    weight *= (0 - hm) / (hi - hm);
                }
            }
            limit += weight * report.rows[i].ratio;
        }
        report.extrapolated = limit;
    }

    report.volume = exact_volume(p);
    report.parity_rank = parity_rank(g);
    report.volume_over_parity =
        report.volume / Rational(boost::multiprecision::pow(BigInt(2), report.parity_rank));
    return report;
}

}  // namespace verlinde
