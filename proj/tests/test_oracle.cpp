#include <doctest.h>
#include <omp.h>

#include <algorithm>
#include <cmath>

#include "cquant/closed_form.hpp"
#include "cquant/errors.hpp"
#include "cquant/oracle.hpp"
#include "test_support.hpp"

using namespace cquant;
using doctest::Approx;

namespace {

bool same_outcome(const SolverOutcome& a, const SolverOutcome& b) {
    if (a.distortion != b.distortion || a.quantizer.size() != b.quantizer.size()) return false;
    for (std::size_t i = 0; i < a.quantizer.size(); ++i) {
        if (!(a.quantizer[i] == b.quantizer[i])) return false;
    }
    return a.iterations == b.iterations;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("n = 1 on a fine grid") {
    oracle::OracleConfig cfg;
    cfg.grid_step = 1e-3;
    const auto res = oracle::brute_force(1, cfg);
    CHECK(res.quantizer[0].index() == ConstraintIndex(1));
    CHECK(std::abs(res.quantizer[0].x() + 0.25) <= 2e-3);
    CHECK(std::abs(res.distortion - 29.0 / 24) <= 1e-5);
}

TEST_CASE("n = 2 and n = 3 select S_n") {
    for (long long n : {2, 3}) {
        const oracle::OracleConfig cfg;  // 1e-2 grid, three refinements
        const auto res = oracle::brute_force(n, cfg);
        const auto expected = closed_form::optimal_points(n);
        for (std::size_t i = 0; i < res.quantizer.size(); ++i) {
            CHECK(res.quantizer[i].index() == ConstraintIndex(n));
            CHECK(std::abs(res.quantizer[i].x() - expected[i].x()) <= 2 * oracle::final_grid_step(cfg));
        }
        CHECK(std::abs(res.distortion - closed_form::vn(n)) <= 1e-5);
        CHECK(res.distortion >= closed_form::vn(n) - 1e-12);
    }
}

TEST_CASE("restricting n = 1 to S_1 changes nothing") {
    oracle::OracleConfig restricted;
    restricted.max_index = 1;
    CHECK(same_outcome(oracle::brute_force(1, restricted), oracle::brute_force(1)));
}

TEST_CASE("restricting n = 2 to S_1 is worse") {
    oracle::OracleConfig restricted;
    restricted.max_index = 1;
    const auto res = oracle::brute_force(2, restricted);
    CHECK(res.quantizer[0].index() == ConstraintIndex(1));
    CHECK(res.distortion > closed_form::vn(2));
    CHECK(res.distortion == Approx(113.0 / 96).epsilon(1e-5));
}

TEST_CASE("capability and argument errors") {
    CHECK_THROWS_AS(oracle::brute_force(4), CapabilityError);
    CHECK_THROWS_AS(oracle::brute_force_serial(10), CapabilityError);
    oracle::OracleConfig cfg;
    cfg.grid_step = 0;
    CHECK_THROWS_AS(oracle::brute_force(2, cfg), std::invalid_argument);
    cfg = {};
    cfg.max_index = 3;
    CHECK_THROWS_AS(oracle::brute_force(2, cfg), std::invalid_argument);
}

TEST_CASE("parallel search reproduces the serial reference exactly") {
    const int saved = omp_get_max_threads();
    for (int threads : {1, 3, 4}) {
        omp_set_num_threads(threads);
        for (long long n = 1; n <= 3; ++n) {
            oracle::OracleConfig cfg;
            cfg.grid_step = n == 3 ? 2e-2 : 1e-2;
            CHECK(same_outcome(oracle::brute_force(n, cfg), oracle::brute_force_serial(n, cfg)));
        }
    }
    omp_set_num_threads(saved);
}

TEST_CASE("riemann_distortion") {
    CHECK(std::abs(oracle::riemann_distortion(closed_form::optimal_points(2), 100'000) - 53.0 / 96) <= 1e-8);
    CHECK(std::abs(oracle::riemann_distortion(Quantizer({ConstraintPoint(ConstraintIndex(1), 0.0)}), 10'000) -
                   4.0 / 3) <= 1e-7);
    // Integrand on [0,1] has |d/dx| <= 2 (1 + max |a|), so one and two panels differ by at most that.
    const auto q = closed_form::optimal_points(3);
    CHECK(std::abs(oracle::riemann_distortion(q, 1) - oracle::riemann_distortion(q, 2)) <= 2.0 * (1.0 + 0.25));
    CHECK_THROWS_AS(oracle::riemann_distortion(q, 0), std::invalid_argument);
}

TEST_CASE("riemann_distortion serial and parallel agree") {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    auto g = testing::rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const long long n = 1 + static_cast<long long>(g() % 12);
        SolverConfig cfg;
        cfg.max_iter = 2;
        const auto q = solve_fixed_constraint(n, ConstraintIndex(n), cfg).quantizer;
        const double a = oracle::riemann_distortion(q, 50'000);
        const double b = oracle::riemann_distortion_serial(q, 50'000);
        CHECK(std::abs(a - b) <= 1e-13);
    }
    omp_set_num_threads(saved);
}

TEST_CASE("property: riemann oracle agrees with the partition-based distortion") {
    auto g = testing::rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const long long n = 1 + static_cast<long long>(g() % 16);
        const ConstraintIndex t(1 + static_cast<long long>(g() % 16));
        std::vector<double> feet(static_cast<std::size_t>(n));
        for (auto& f : feet) f = testing::uniform(g, 0.0, 1.0);
        std::sort(feet.begin(), feet.end());
        std::vector<ConstraintPoint> pts;
        for (double f : feet) pts.push_back(inverse_map(t, f));
        const Quantizer q(std::move(pts));
        CHECK(std::abs(oracle::riemann_distortion(q, 100'000) - distortion(q)) <= 1e-7);
    }
}

}  // TEST_SUITE
