#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "verlinde/polytope.hpp"
#include "verlinde/weights.hpp"

using namespace verlinde;

namespace {

// {x >= 0, sum x <= 1}; volume 1/d!
ClebschGordanPolytope simplex(int d)
{
    ClebschGordanPolytope p;
    p.dim = d;
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(d), 0);
        row[i] = -1;
        p.ineqs.push_back({row, 0});
    }
    p.ineqs.push_back({std::vector<Rational>(static_cast<std::size_t>(d), 1), 1});
    return p;
}

Rational factorial(int d)
{
    Rational f = 1;
    for (int i = 2; i <= d; ++i) {
        f *= i;
    }
    return f;
}

std::vector<Rational> point(std::initializer_list<Rational> xs) { return {xs}; }

}  // namespace

TEST_CASE("theta polytope constraints")
{
    const auto p = build_polytope(TrinionGraph::theta());
    CHECK(p.dim == 3);
    // 6 box rows + 4 vertex rows; the second vertex repeats the first
    CHECK(p.ineqs.size() == 10);
    CHECK(p.ineqs[0] == Inequality{{-1, 0, 0}, 0});
    CHECK(p.ineqs[1] == Inequality{{1, 0, 0}, 1});

    CHECK(contains(p, point({Rational(1, 2), Rational(1, 2), 0})));
    CHECK(contains(p, point({1, 1, 0})));
    CHECK_FALSE(contains(p, point({1, 1, 1})));
    CHECK_FALSE(contains(p, point({1, 0, 0})));
    CHECK_THROWS_AS(contains(p, point({0, 0})), std::invalid_argument);
}

TEST_CASE("dumbbell polytope constraints")
{
    const auto p = build_polytope(TrinionGraph::dumbbell());
    CHECK(p.dim == 3);
    const auto& d = TrinionGraph::dumbbell();
    int bridge = -1;
    for (int e = 0; e < d.edge_count(); ++e) {
        if (!d.edges()[e].is_loop()) {
            bridge = e;
        }
    }
    REQUIRE(bridge >= 0);
    std::vector<Rational> c(3, Rational(1, 2));
    c[bridge] = 1;  // bridge at most twice a loop, loop + bridge/2 <= 1
    CHECK(contains(p, c));
    c[bridge] = Rational(6, 5);
    CHECK_FALSE(contains(p, c));
}

TEST_CASE("exact volumes")
{
    CHECK(exact_volume(build_polytope(TrinionGraph::theta())) == Rational(1, 3));
    CHECK(exact_volume(build_polytope(TrinionGraph::dumbbell())) == Rational(1, 3));
    for (int d = 1; d <= 5; ++d) {
        CHECK(exact_volume(ClebschGordanPolytope::unit_cube(d)) == 1);
        CHECK(exact_volume(simplex(d)) == 1 / factorial(d));
    }
}

TEST_CASE("exact volume does not depend on inequality order")
{
    auto p = build_polytope(TrinionGraph::theta());
    const auto reference = exact_volume(p);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(p.ineqs.begin(), p.ineqs.end(), rng);
        CHECK(exact_volume(p) == reference);
    }
}

TEST_CASE("exact volume of genus-3 polytopes")
{
    for (const auto& g : generate_genus_graphs(3)) {
        CHECK(exact_volume(build_polytope(g)) == Rational(2, 45));
    }
    CHECK_THROWS_AS(exact_volume(build_polytope(generate_genus_graphs(4).front())),
                    std::invalid_argument);
}

TEST_CASE("monte carlo volume")
{
    for (const auto& g : {TrinionGraph::theta(), TrinionGraph::dumbbell()}) {
        const auto p = build_polytope(g);
        const auto mc = mc_volume(p, 200'000, 11);
        CHECK(mc.samples == 200'000);
        CHECK(std::abs(mc.estimate - 1.0 / 3.0) < 4 * mc.standard_error);
        const auto again = mc_volume(p, 200'000, 11);
        CHECK(again.hits == mc.hits);
        CHECK(again.estimate == mc.estimate);
    }
    const auto mc3 = mc_volume(build_polytope(generate_genus_graphs(3).front()), 400'000, 5);
    CHECK(std::abs(mc3.estimate - 2.0 / 45.0) < 4 * mc3.standard_error);
    CHECK_THROWS_AS(mc_volume(ClebschGordanPolytope::unit_cube(2), 10, 1), std::invalid_argument);
}

TEST_CASE("lattice_count agrees with the admissible count")
{
    for (int genus = 2; genus <= 3; ++genus) {
        for (const auto& g : generate_genus_graphs(genus)) {
            const auto p = build_polytope(g);
            for (int k = 1; k <= 6; ++k) {
                CHECK(lattice_count(p, g, k) == count_admissible_bruteforce(g, k));
            }
        }
    }
    const auto theta = TrinionGraph::theta();
    CHECK_THROWS_AS(lattice_count(build_polytope(theta), theta, 0), std::invalid_argument);
    CHECK_THROWS_AS(lattice_count(build_polytope(theta), theta, 50, 1000), BudgetExceeded);
}

TEST_CASE("asymptotic table")
{
    const auto theta = TrinionGraph::theta();
    const auto report = asymptotic_table(theta, 40);
    REQUIRE(report.rows.size() == 40);
    CHECK(report.volume == Rational(1, 3));
    CHECK(report.parity_rank == 1);
    CHECK(report.volume_over_parity == Rational(1, 6));
    REQUIRE(report.extrapolated.has_value());
    CHECK(std::abs(to_double(*report.extrapolated) - 1.0 / 6.0) < 0.01 / 6.0);

    // counts are (k+1)(k+2)(k+3)/6 and ratios fall towards the limit
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        const int k = row.level;
        CHECK(row.count == BigInt((k + 1) * (k + 2) * (k + 3) / 6));
        CHECK(row.ratio == Rational(row.count, BigInt(k) * k * k));
        if (i > 0) {
            CHECK(row.ratio < report.rows[i - 1].ratio);
        }
        CHECK(row.ratio > Rational(1, 6));
    }

    const auto single = asymptotic_table(theta, 1);
    CHECK(single.rows.size() == 1);
    CHECK_FALSE(single.extrapolated.has_value());
    CHECK_THROWS_AS(asymptotic_table(theta, 0), std::invalid_argument);
}
