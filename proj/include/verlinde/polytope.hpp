#pragma once

// Moment polytope of a trinion graph in action coordinates c_e = j_e / k.
//
// Inequalities are a.c <= b with exact rational data. build_polytope emits,
// in this order: the box 0 <= c_e <= 1 for every edge, then per vertex the
// three triangle inequalities and c_a + c_b + c_c <= 2 (a loop contributes
// its coordinate twice). Exact duplicates are dropped at first occurrence.

#include <cstdint>
#include <optional>
#include <vector>

#include "verlinde/graph.hpp"
#include "verlinde/numeric.hpp"

namespace verlinde {

struct Inequality {
    std::vector<Rational> coeffs;
    Rational bound;

    friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct ClebschGordanPolytope {
    int dim = 0;
    std::vector<Inequality> ineqs;

    /// [0,1]^d with no further constraints.
    static ClebschGordanPolytope unit_cube(int dim);

    friend bool operator==(const ClebschGordanPolytope&, const ClebschGordanPolytope&) = default;
};

ClebschGordanPolytope build_polytope(const TrinionGraph& g);

/// Throws std::invalid_argument on a dimension mismatch.
bool contains(const ClebschGordanPolytope& p, const std::vector<Rational>& point);

inline constexpr int kMaxExactVolumeDim = 6;

/// Exact Euclidean volume by recursive facet integration. Lower-dimensional
/// polytopes give 0. Throws std::invalid_argument above kMaxExactVolumeDim
/// (use mc_volume) or if the polytope is unbounded.
Rational exact_volume(const ClebschGordanPolytope& p);

struct MonteCarloVolume {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
};

/// Hit-or-miss sampling of [0,1]^d. The sample stream is split into a fixed
/// number of shards seeded from `seed`, so the result does not depend on the
/// thread count. Throws std::invalid_argument below 1000 samples.
MonteCarloVolume mc_volume(const ClebschGordanPolytope& p, std::uint64_t samples,
                           std::uint64_t seed);

/// Points c in (1/k)Z^d inside p whose labels j = k c have an even sum at
/// every vertex of g. Throws BudgetExceeded if (k+1)^d exceeds max_points.
BigInt lattice_count(const ClebschGordanPolytope& p, const TrinionGraph& g, int level,
                     std::uint64_t max_points = 100'000'000);

struct AsymptoticRow {
    int level = 0;
    BigInt count;
    Rational ratio;  // count / k^d
};

struct AsymptoticReport {
    std::vector<AsymptoticRow> rows;
    /// Limit of count/k^d from the last three rows (fit C + a/k + b/k^2); empty below 3 rows.
    std::optional<Rational> extrapolated;
    Rational volume;
    int parity_rank = 0;
    Rational volume_over_parity;  // volume / 2^parity_rank
};

AsymptoticReport asymptotic_table(const TrinionGraph& g, int k_max);

}  // namespace verlinde
