#include "doctest.h"

#include <cmath>
#include <map>

#include "verlinde/fusion.hpp"

using namespace verlinde;

namespace {

// Independent route to the level-k product: Clebsch-Gordan in the full ring,
// then reduce modulo the ideal by the affine Weyl reflection m -> 2k+2-m
// (sign -1), with m = k+1 mapping to zero.
std::map<int, std::int64_t> reflected_product(int k, int a, int b)
{
    std::map<int, std::int64_t> out;
    for (const SpinLabel s : clebsch_gordan({a}, {b})) {
        if (s.m <= k) {
            out[s.m] += 1;
        } else if (s.m > k + 1) {
            out[2 * k + 2 - s.m] -= 1;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<int, std::int64_t> as_map(const FusionElement& e)
{
    std::map<int, std::int64_t> out;
    for (int m = 0; m <= e.level(); ++m) {
        if (e.coefficient({m}) != 0) {
            out[m] = e.coefficient({m});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("clebsch_gordan expands the tensor product")
{
    auto labels = [](const std::vector<SpinLabel>& v) {
        std::vector<int> out;
        for (const auto s : v) {
            out.push_back(s.m);
        }
        return out;
    };
    CHECK(labels(clebsch_gordan({0}, {5})) == std::vector<int>{5});
    CHECK(labels(clebsch_gordan({1}, {1})) == std::vector<int>{0, 2});
    CHECK(labels(clebsch_gordan({2}, {3})) == std::vector<int>{1, 3, 5});
    CHECK_THROWS_AS(clebsch_gordan({-1}, {2}), std::invalid_argument);

    // dimensions add up: (m1+1)(m2+1) = sum (m+1)
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            int dim = 0;
            for (const auto s : clebsch_gordan({a}, {b})) {
                dim += s.dimension();
            }
            CHECK(dim == (a + 1) * (b + 1));
        }
    }
}

TEST_CASE("fusion_product examples")
{
    const auto v1_1 = FusionElement::basis(1, {1});
    CHECK(as_map(fusion_product(v1_1, v1_1)) == std::map<int, std::int64_t>{{0, 1}});

    const auto v2_1 = FusionElement::basis(2, {1});
    CHECK(as_map(fusion_product(v2_1, v2_1)) == std::map<int, std::int64_t>{{0, 1}, {2, 1}});

    for (int k = 0; k <= 5; ++k) {
        FusionElement x(k);
        for (int m = 0; m <= k; ++m) {
            x.add({m}, m + 3);
        }
        CHECK(fusion_product(FusionElement::basis(k, {0}), x) == x);
    }

    CHECK_THROWS_AS(fusion_product(FusionElement(1), FusionElement(2)), std::invalid_argument);
}

TEST_CASE("fusion_product matches the reflection reduction of Clebsch-Gordan")
{
    for (int k = 0; k <= 8; ++k) {
        for (int a = 0; a <= k; ++a) {
            for (int b = 0; b <= k; ++b) {
                const auto product =
                    fusion_product(FusionElement::basis(k, {a}), FusionElement::basis(k, {b}));
                CHECK(as_map(product) == reflected_product(k, a, b));
            }
        }
    }
}

TEST_CASE("fusion ring is commutative and associative up to level 8")
{
    for (int k = 0; k <= 8; ++k) {
        for (int a = 0; a <= k; ++a) {
            const auto va = FusionElement::basis(k, {a});
            for (int b = 0; b <= k; ++b) {
                const auto vb = FusionElement::basis(k, {b});
                const auto ab = fusion_product(va, vb);
                REQUIRE(ab == fusion_product(vb, va));
                for (int c = 0; c <= k; ++c) {
                    const auto vc = FusionElement::basis(k, {c});
                    REQUIRE(fusion_product(ab, vc) == fusion_product(va, fusion_product(vb, vc)));
                }
            }
        }
    }
}

TEST_CASE("characters")
{
    for (int k = 0; k <= 4; ++k) {
        for (const auto& z : CharacterPoint::all(k)) {
            CHECK(abs(character(z, {0}) - 1) < HighPrecision("1e-40"));
        }
    }
    CHECK(abs(character(CharacterPoint(1, 0), {1})) < HighPrecision("1e-40"));
    CHECK(character(CharacterPoint(1, 2), {1}).convert_to<double>() ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    CHECK_THROWS_AS(CharacterPoint(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(CharacterPoint(5, 3), std::invalid_argument);
}

TEST_CASE("characters are ring homomorphisms and kill the ideal generator")
{
    CHECK(character_homomorphism_residual(1, CharacterPoint(1, 1), {1}, {1}) <
          HighPrecision("1e-9"));
    CHECK(character_homomorphism_residual(2, CharacterPoint(2, 2), {1}, {2}) <
          HighPrecision("1e-9"));

    for (int k = 0; k <= 8; ++k) {
        for (const auto& z : CharacterPoint::all(k)) {
            CHECK(abs(character(z, {k + 1})) < HighPrecision("1e-9"));
            for (int a = 0; a <= k; ++a) {
                CHECK(character_homomorphism_residual(k, z, {0}, {a}) < HighPrecision("1e-40"));
                for (int b = 0; b <= k; ++b) {
                    CHECK(character_homomorphism_residual(k, z, {a}, {b}) <
                          HighPrecision("1e-9"));
                }
            }
        }
    }
}

TEST_CASE("verlinde_dim examples")
{
    CHECK(verlinde_dim(2, 0) == 1);
    CHECK(verlinde_dim(2, 1) == 4);
    CHECK(verlinde_dim(2, 2) == 10);
    CHECK_THROWS_AS(verlinde_dim(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(verlinde_dim(2, -1), std::invalid_argument);
}

TEST_CASE("verlinde_dim closed forms")
{
    // Summing the formula by hand: k=1 gives 2^g, k=2 gives 2^(g-1)(2^g+1),
    // and genus 2 gives the tetrahedral numbers (k+1)(k+2)(k+3)/6.
    for (int g = 2; g <= 6; ++g) {
        const BigInt two_g = BigInt(1) << g;
        CHECK(verlinde_dim(g, 1) == two_g);
        CHECK(verlinde_dim(g, 2) == (two_g / 2) * (two_g + 1));
    }
    for (int k = 0; k <= 60; ++k) {
        CHECK(verlinde_dim(2, k) == BigInt((k + 1) * (k + 2) * (k + 3) / 6));
    }
    CHECK(verlinde_dim(3, 4) == 329);
}

TEST_CASE("verlinde_dim is integral and increasing in the level")
{
    for (int g = 2; g <= 6; ++g) {
        BigInt previous = 0;
        for (int k = 0; k <= 20; ++k) {
            const auto v = verlinde_evaluate(g, k);
            CHECK(v.dimension > 0);
            CHECK(v.residual < HighPrecision("1e-6"));
            if (k >= 1) {
                CHECK(v.dimension > previous);
            }
            previous = v.dimension;
        }
    }
}
