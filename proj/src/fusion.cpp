#include "verlinde/fusion.hpp"

#include <cstdlib>
#include <string>

#include <boost/math/constants/constants.hpp>

namespace verlinde {

namespace {

void require_level(int level)
{
    if (level < 0) {
        throw std::invalid_argument("level must be non-negative, got " + std::to_string(level));
    }
}

void require_basis(int level, SpinLabel label)
{
    if (label.m < 0 || label.m > level) {
        throw std::invalid_argument("spin label m=" + std::to_string(label.m) +
                                    " outside level-" + std::to_string(level) + " basis");
    }
}

}  // namespace

CharacterPoint::CharacterPoint(int n, int level) : n_(n), level_(level)
{
    require_level(level);
    if (n < 1 || n > level + 1) {
        throw std::invalid_argument("character point n=" + std::to_string(n) +
                                    " outside [1, k+1] for k=" + std::to_string(level));
    }
}

HighPrecision CharacterPoint::value() const
{
    return boost::math::constants::pi<HighPrecision>() * n_ / (level_ + 2);
}

std::vector<CharacterPoint> CharacterPoint::all(int level)
{
    std::vector<CharacterPoint> points;
    for (int n = 1; n <= level + 1; ++n) {
        points.emplace_back(n, level);
    }
    return points;
}

FusionElement::FusionElement(int level) : level_(level)
{
    require_level(level);
    coeffs_.assign(static_cast<std::size_t>(level) + 1, 0);
}

FusionElement FusionElement::basis(int level, SpinLabel label)
{
    FusionElement e(level);
    e.add(label, 1);
    return e;
}

std::int64_t FusionElement::coefficient(SpinLabel label) const
{
    if (label.m < 0 || label.m > level_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(label.m)];
}

void FusionElement::add(SpinLabel label, std::int64_t multiplicity)
{
    require_basis(level_, label);
    coeffs_[static_cast<std::size_t>(label.m)] += multiplicity;
}

std::vector<SpinLabel> clebsch_gordan(SpinLabel a, SpinLabel b)
{
    if (a.m < 0 || b.m < 0) {
        throw std::invalid_argument("spin labels must be non-negative");
    }
    std::vector<SpinLabel> out;
    for (int m = std::abs(a.m - b.m); m <= a.m + b.m; m += 2) {
        out.push_back({m});
    }
    return out;
}

int fusion_coefficient(int level, SpinLabel a, SpinLabel b, SpinLabel c)
{
    if (a.m < 0 || b.m < 0 || c.m < 0 || a.m > level || b.m > level || c.m > level) {
        return 0;
    }
    const int sum = a.m + b.m;
    if ((sum + c.m) % 2 != 0) {
        return 0;
    }
    return (std::abs(a.m - b.m) <= c.m && c.m <= std::min(sum, 2 * level - sum)) ? 1 : 0;
}

FusionElement fusion_product(const FusionElement& a, const FusionElement& b)
{
    if (a.level() != b.level()) {
        throw std::invalid_argument("fusion_product: level mismatch (" +
                                    std::to_string(a.level()) + " vs " +
                                    std::to_string(b.level()) + ")");
    }
    const int k = a.level();
    FusionElement out(k);
    for (int i = 0; i <= k; ++i) {
        const auto ca = a.coefficient({i});
        if (ca == 0) {
            continue;
        }
        for (int j = 0; j <= k; ++j) {
            const auto cb = b.coefficient({j});
            if (cb == 0) {
                continue;
            }
            for (int c = std::abs(i - j); c <= std::min(i + j, 2 * k - i - j); c += 2) {
                out.add({c}, ca * cb);
            }
        }
    }
    return out;
}

HighPrecision character(const CharacterPoint& z, SpinLabel label)
{
    const HighPrecision x = z.value();
    return sin((label.m + 1) * x) / sin(x);
}

HighPrecision character_homomorphism_residual(int level, const CharacterPoint& z, SpinLabel a,
                                              SpinLabel b)
{
    require_basis(level, a);
    require_basis(level, b);
    HighPrecision rhs = 0;
    for (int c = 0; c <= level; ++c) {
        if (fusion_coefficient(level, a, b, {c}) != 0) {
            rhs += character(z, {c});
        }
    }
    return abs(character(z, a) * character(z, b) - rhs);
}

VerlindeValue verlinde_evaluate(int genus, int level)
{
    if (genus < 2) {
        throw std::invalid_argument("verlinde_dim requires genus >= 2, got " +
                                    std::to_string(genus));
    }
    require_level(level);

    const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
    HighPrecision sum = 0;
    for (int n = 1; n <= level + 1; ++n) {
        const HighPrecision s = sin(pi * n / (level + 2));
        sum += pow(s, -(2 * genus - 2));
    }
    const HighPrecision raw = pow(HighPrecision(level + 2) / 2, genus - 1) * sum;
    const HighPrecision rounded = round(raw);
    const HighPrecision residual = abs(raw - rounded);
    if (residual >= HighPrecision("1e-6")) {
        throw PrecisionError("Verlinde sum for g=" + std::to_string(genus) +
                             ", k=" + std::to_string(level) + " is " + raw.str(30) +
                             ", not within 1e-6 of an integer");
    }
    return {rounded.convert_to<BigInt>(), residual};
}

BigInt verlinde_dim(int genus, int level)
{
    return verlinde_evaluate(genus, level).dimension;
}

}  // namespace verlinde
