#pragma once

// Admissible integer weights of level k on a trinion graph.
//
// Labels are integers j_e in [0, k]; the weight is w = j/(2k) and the action
// coordinate is c = j/k. At each vertex, with the three half-edge labels
// (a loop contributes its label twice), a labeling is admissible iff
//   a + b + c is even,  a + b + c <= 2k,  and each label <= sum of the others.

#include <cstdint>
#include <vector>

#include "verlinde/graph.hpp"
#include "verlinde/numeric.hpp"

namespace verlinde {

struct WeightAssignment {
    int level = 0;
    std::vector<int> labels;  // indexed by edge

    friend auto operator<=>(const WeightAssignment&, const WeightAssignment&) = default;
};

/// An admissible assignment, used as the index of a theta-basis section.
class ThetaLabel {
public:
    /// Throws std::invalid_argument unless w is admissible on g.
    ThetaLabel(const TrinionGraph& g, WeightAssignment w);

    const WeightAssignment& weights() const { return weights_; }
    int level() const { return weights_.level; }
    const std::vector<int>& labels() const { return weights_.labels; }

    friend auto operator<=>(const ThetaLabel&, const ThetaLabel&) = default;

private:
    WeightAssignment weights_;
};

struct EnumerationLimits {
    /// Cap on (k+1)^E for brute-force enumeration and counting.
    std::uint64_t max_states = 10'000'000;
    /// Cap on entries of the largest intermediate tensor during contraction.
    std::uint64_t max_frontier = std::uint64_t{1} << 24;
};

/// The vertex test alone.
bool vertex_admissible(int level, int a, int b, int c);

/// Throws std::invalid_argument if labels do not match the graph's edges.
bool is_admissible(const TrinionGraph& g, const WeightAssignment& w);

/// Sorted lexicographically. Throws BudgetExceeded above limits.max_states.
std::vector<WeightAssignment> enumerate_admissible(const TrinionGraph& g, int level,
                                                   const EnumerationLimits& limits = {});

BigInt count_admissible_bruteforce(const TrinionGraph& g, int level,
                                   const EnumerationLimits& limits = {});

/// Contracts the per-vertex admissibility tensors along edges, eliminating the
/// edge with the smallest resulting frontier first. Throws BudgetExceeded if
/// an intermediate tensor would exceed limits.max_frontier entries.
BigInt count_via_contraction(const TrinionGraph& g, int level,
                             const EnumerationLimits& limits = {});

std::vector<ThetaLabel> theta_basis(const TrinionGraph& g, int level,
                                    const EnumerationLimits& limits = {});

/// j/(2k) and j/k. Level 0 maps the only label 0 to 0.
Rational weight_value(int label, int level);
Rational action_coordinate(int label, int level);

/// Rank over GF(2) of the per-vertex parity conditions (loops drop out).
int parity_rank(const TrinionGraph& g);

}  // namespace verlinde
