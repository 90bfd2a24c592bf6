#pragma once

// su(2) representation ring, its level-k fusion quotient, characters and the
// Verlinde dimension formula.
//
// Spins are stored as twice-spin integers throughout: the irreducible
// representation V_i of spin i (dimension 2i+1) has label m = 2i, so its
// dimension is m+1 and no half-integers ever appear. At level k the basis of
// the fusion ring is m = 0..k, and the ideal is generated by m = k+1.

#include <compare>
#include <cstdint>
#include <vector>

#include "verlinde/numeric.hpp"

namespace verlinde {

struct SpinLabel {
    int m = 0;

    constexpr int dimension() const { return m + 1; }
    friend constexpr auto operator<=>(SpinLabel, SpinLabel) = default;
};

/// Evaluation point z = n*pi/(k+2) with 1 <= n <= k+1, the zeros of the
/// character of the ideal generator at level k.
class CharacterPoint {
public:
    CharacterPoint(int n, int level);

    int n() const { return n_; }
    int level() const { return level_; }
    HighPrecision value() const;

    static std::vector<CharacterPoint> all(int level);

private:
    int n_;
    int level_;
};

/// Element of the level-k fusion ring: integer multiplicities over m = 0..k.
class FusionElement {
public:
    explicit FusionElement(int level);

    static FusionElement basis(int level, SpinLabel label);

    int level() const { return level_; }
    std::int64_t coefficient(SpinLabel label) const;
    void add(SpinLabel label, std::int64_t multiplicity);
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    friend bool operator==(const FusionElement&, const FusionElement&) = default;

private:
    int level_;
    std::vector<std::int64_t> coeffs_;
};

/// Tensor product decomposition in the full representation ring:
/// {|m1-m2|, |m1-m2|+2, ..., m1+m2}.
std::vector<SpinLabel> clebsch_gordan(SpinLabel a, SpinLabel b);

/// Level-k fusion coefficient N_{ab}^c in {0, 1}.
int fusion_coefficient(int level, SpinLabel a, SpinLabel b, SpinLabel c);

/// Throws std::invalid_argument on level mismatch.
FusionElement fusion_product(const FusionElement& a, const FusionElement& b);

/// sin((m+1) z) / sin z.
HighPrecision character(const CharacterPoint& z, SpinLabel label);

/// |chi(a) chi(b) - sum_c N_{ab}^c chi(c)| at z.
HighPrecision character_homomorphism_residual(int level, const CharacterPoint& z, SpinLabel a,
                                              SpinLabel b);

struct VerlindeValue {
    BigInt dimension;
    HighPrecision residual;  // |raw - round(raw)|
};

/// Evaluates ((k+2)/2)^(g-1) * sum_{n=1}^{k+1} sin(n pi/(k+2))^(2-2g).
/// Throws PrecisionError if the result is not within 1e-6 of an integer.
VerlindeValue verlinde_evaluate(int genus, int level);

BigInt verlinde_dim(int genus, int level);

}  // namespace verlinde
