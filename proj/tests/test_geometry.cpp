#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cquant/errors.hpp"
#include "cquant/geometry.hpp"
#include "test_support.hpp"

using namespace cquant;
using doctest::Approx;

TEST_SUITE("geometry") {

TEST_CASE("squared_distance") {
    CHECK(squared_distance({0, 0}, {0, 0}) == 0.0);
    CHECK(squared_distance({0, 0}, {3, 4}) == 25.0);
    CHECK(squared_distance({0.5, 0}, {-0.25, 0.75}) == 9.0 / 8.0);
    CHECK(squared_distance({1, 2}, {-3, 5}) == squared_distance({-3, 5}, {1, 2}));
}

TEST_CASE("constraint index and membership") {
    CHECK_THROWS_AS(ConstraintIndex(0), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintIndex(-3), std::invalid_argument);
    CHECK_NOTHROW(ConstraintPoint(ConstraintIndex(4), -0.25));
    CHECK_NOTHROW(ConstraintPoint(ConstraintIndex(4), 1.0));
    CHECK_THROWS_AS(ConstraintPoint(ConstraintIndex(4), -0.2500001), std::out_of_range);
    CHECK_THROWS_AS(ConstraintPoint(ConstraintIndex(1), 1.0000001), std::out_of_range);
    CHECK_THROWS_AS(ConstraintPoint(ConstraintIndex(1), std::nan("")), std::out_of_range);
}

TEST_CASE("embed") {
    CHECK(embed({ConstraintIndex(1), -0.25}) == Point{-0.25, 0.75});
    CHECK(embed({ConstraintIndex(2), 0.0}) == Point{0.0, 0.5});
    CHECK(embed({ConstraintIndex(4), 1.0}) == Point{1.0, 1.25});
}

TEST_CASE("forward_map") {
    CHECK(forward_map({ConstraintIndex(1), -0.25}) == 0.5);
    CHECK(forward_map({ConstraintIndex(2), 0.125}) == 0.75);
    CHECK(std::abs(forward_map({ConstraintIndex(3), -1.0 / 6.0})) <= 1e-16);
}

TEST_CASE("inverse_map") {
    CHECK(inverse_map(ConstraintIndex(1), 0.5) == ConstraintPoint(ConstraintIndex(1), -0.25));
    CHECK(inverse_map(ConstraintIndex(2), 0.5) == ConstraintPoint(ConstraintIndex(2), 0.0));
    CHECK(inverse_map(ConstraintIndex(5), 0.2).x() == 0.0);
    // Preimage (foot - 1/j)/2 must stay on S_j.
    CHECK_THROWS_AS(inverse_map(ConstraintIndex(1), 3.5), std::out_of_range);
    CHECK_THROWS_AS(inverse_map(ConstraintIndex(2), -0.6), std::out_of_range);
}

TEST_CASE("feasible_foot_range") {
    CHECK(feasible_foot_range(ConstraintIndex(1)) == std::pair{-0.5, 0.0});
    CHECK(feasible_foot_range(ConstraintIndex(2)) == std::pair{-0.25, 0.25});
    const auto [lo, hi] = feasible_foot_range(ConstraintIndex(1'000'000'000));
    CHECK(lo == Approx(0.0).scale(1));
    CHECK(hi == Approx(0.5));
    for (long long j = 1; j <= 50; ++j) {
        const ConstraintIndex idx(j);
        const auto [a, b] = feasible_foot_range(idx);
        CHECK(forward_map({idx, a}) == Approx(0.0).scale(1));
        CHECK(forward_map({idx, b}) == Approx(1.0));
    }
}

TEST_CASE("voronoi_breakpoint examples") {
    const ConstraintIndex two(2);
    CHECK(voronoi_breakpoint({two, -0.125}, {two, 0.125}) == 0.5);

    // Equal ordinates: (0,1) on S_1 and (1,1) is not on any S_j, so use two
    // points of one constraint mirrored about x = 1/2 in the plane.
    const ConstraintPoint p(ConstraintIndex(1), 0.0);  // (0,1)
    const ConstraintPoint q(ConstraintIndex(1), 1.0);  // (1,2)
    CHECK(voronoi_breakpoint(p, q) == 2.0);  // = 0 + 1 + 1

    // (0,1) against (1/4,3/4): bisector meets the axis at -3/4.
    const ConstraintPoint r(two, 0.25);
    const double x = voronoi_breakpoint(p, r);
    CHECK(x == Approx(-0.75).epsilon(1e-15));
    const double root = testing::bisect(
        [&](double s) { return squared_distance(embed(p), {s, 0}) - squared_distance(embed(r), {s, 0}); },
        -2.0, 2.0);
    CHECK(x == Approx(root).epsilon(1e-12));
}

TEST_CASE("voronoi_breakpoint rejects a shared abscissa") {
    CHECK_THROWS_AS(voronoi_breakpoint({ConstraintIndex(1), 0.0}, {ConstraintIndex(2), 0.0}), DegenerateBoundary);
    CHECK_THROWS_AS(voronoi_breakpoint({ConstraintIndex(3), 0.1}, {ConstraintIndex(3), 0.1}), DegenerateBoundary);
}

TEST_CASE("property: forward/inverse round trip and monotonicity") {
    auto g = testing::rng();
    for (int trial = 0; trial < 20000; ++trial) {
        const ConstraintIndex j(1 + static_cast<long long>(g() % 200));
        const auto [lo, hi] = feasible_foot_range(j);
        const double x = testing::uniform(g, lo, hi);
        const ConstraintPoint cp(j, x);
        const double foot = forward_map(cp);
        const double scale = std::max({1.0, std::abs(x), j.offset()});
        CHECK(std::abs(inverse_map(j, foot).x() - x) <= 1e-15 * scale);
        CHECK(std::abs(forward_map(inverse_map(j, foot)) - foot) <= 1e-15 * scale);

        const double x2 = testing::uniform(g, lo, hi);
        if (x2 != x) {
            CHECK((forward_map({j, x2}) > foot) == (x2 > x));
        }
    }
}

TEST_CASE("property: breakpoint equidistance and same-constraint reduction") {
    auto g = testing::rng(7);
    for (int trial = 0; trial < 20000; ++trial) {
        const ConstraintIndex jp(1 + static_cast<long long>(g() % 20));
        const ConstraintIndex jq(1 + static_cast<long long>(g() % 20));
        const ConstraintPoint p(jp, testing::uniform(g, -jp.offset(), 1.0));
        const ConstraintPoint q(jq, testing::uniform(g, -jq.offset(), 1.0));
        if (std::abs(p.x() - q.x()) < 1e-3) {
            continue;
        }
        const double x = voronoi_breakpoint(p, q);
        const double dp = squared_distance(embed(p), {x, 0});
        const double dq = squared_distance(embed(q), {x, 0});
        CHECK(std::abs(dp - dq) <= 1e-12 * std::max(1.0, dp));

        const ConstraintPoint q_same(jp, q.x() < -jp.offset() ? -jp.offset() : q.x());
        if (q_same.x() != p.x()) {
            const double reduced = p.x() + q_same.x() + jp.offset();
            CHECK(std::abs(voronoi_breakpoint(p, q_same) - reduced) <= 1e-15 * std::max(1.0, std::abs(reduced)));
        }
    }
}

}  // TEST_SUITE
