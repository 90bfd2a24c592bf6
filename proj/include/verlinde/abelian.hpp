#pragma once

// Abelian Bohr-Sommerfeld counting on a real torus fibration of rank g, and
// intersection counting for flat affine multisections of the dual fibration.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "verlinde/numeric.hpp"

namespace verlinde {

struct TorusFibration {
    int genus = 1;
    int level = 1;
};

/// Point of order k on the base torus, stored as residues mod k.
struct Characteristic {
    int level = 1;
    std::vector<int> residues;

    friend auto operator<=>(const Characteristic&, const Characteristic&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// One sheet b -> A b + t (mod Z^g) of the multisection.
struct MultisectionComponent {
    IntMatrix matrix;
    std::vector<Rational> shift;  // entries in [0, 1)
};

struct AffineMultisection {
    int genus = 1;
    std::vector<MultisectionComponent> components;
};

/// A component with det A = 0 meets the zero section in a positive-dimensional set.
class SingularMultisection : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SmithNormalForm {
    std::vector<BigInt> diagonal;          // d_1 | d_2 | ..., all >= 0
    std::vector<std::vector<BigInt>> left;   // U, unimodular
    std::vector<std::vector<BigInt>> right;  // V, unimodular; U A V = diag
};

SmithNormalForm smith_normal_form(const IntMatrix& a);

/// All k^g characteristics in lexicographic order. Throws BudgetExceeded above max_points.
std::vector<Characteristic> bs_points(const TorusFibration& f, std::uint64_t max_points = 1'000'000);

/// Componentwise sum mod k. Throws std::invalid_argument on a (g, k) mismatch.
Characteristic translate_label(const Characteristic& w, const Characteristic& v);

/// Sum over components of |det A|. Throws SingularMultisection if any det A = 0.
BigInt gft_intersection_count(const AffineMultisection& m);

struct EbsFibre {
    std::vector<Rational> point;  // in [0, 1)^g
    int component = 0;

    friend auto operator<=>(const EbsFibre&, const EbsFibre&) = default;
};

/// Solutions of A b + t = 0 mod Z^g for every component, sorted by point then
/// component. A point shared by several components appears once per component.
std::vector<EbsFibre> e_bs_fibres(const AffineMultisection& m);

}  // namespace verlinde
