#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cquant/asymptotics.hpp"
#include "cquant/closed_form.hpp"

using namespace cquant;
using doctest::Approx;

TEST_SUITE("asymptotics") {

TEST_CASE("excess") {
    CHECK(asymptotics::excess(1) == Approx(25.0 / 24).epsilon(1e-16));
    CHECK(asymptotics::excess(2) == Approx(37.0 / 96).epsilon(1e-16));
    double prev = asymptotics::excess(1);
    for (long long n = 2; n <= 100'000; n += 97) {
        const double e = asymptotics::excess(n);
        REQUIRE(e > 0);
        REQUIRE(e < prev);
        prev = e;
    }
}

TEST_CASE("dimension_direct") {
    // Values from 2 log n / -log((12n + 13) / (24 n^2)) evaluated independently.
    CHECK(asymptotics::dimension_direct(2) == Approx(1.4540070647120285).epsilon(1e-14));
    CHECK(asymptotics::dimension_direct(10'000) == Approx(1.8600399242836598).epsilon(1e-14));
    CHECK(asymptotics::dimension_direct(1'000'000) == Approx(1.9044506857250387).epsilon(1e-14));
    CHECK_THROWS_AS(asymptotics::dimension_direct(1), std::domain_error);
}

TEST_CASE("dimension_direct increases toward 2") {
    double prev = asymptotics::dimension_direct(2);
    for (long long n = 3; n <= 100'000'000; n = n * 5 / 4 + 1) {
        const double d = asymptotics::dimension_direct(n);
        REQUIRE(d > prev);
        REQUIRE(d < 2.0);
        prev = d;
    }
}

TEST_CASE("geometric samples") {
    CHECK(asymptotics::geometric_samples(64, 16384, 9) ==
          std::vector<long long>{64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384});
    CHECK(asymptotics::geometric_samples(2, 8, 3) == std::vector<long long>{2, 4, 8});
    CHECK(asymptotics::geometric_samples(2, 3, 10) == std::vector<long long>{2, 3});
}

TEST_CASE("dimension_regression") {
    const auto est = asymptotics::dimension_regression(64, 16384, 9);
    CHECK(est.slope >= -1.01);
    CHECK(est.slope <= -0.99);
    CHECK(est.dimension >= 1.98);
    CHECK(est.dimension <= 2.02);
    CHECK(est.slope == Approx(-1.0024349294501087).epsilon(1e-12));
    CHECK(est.sample_range == std::pair<long long, long long>{64, 16384});

    const auto small = asymptotics::dimension_regression(2, 8, 3);
    CHECK(small.slope == Approx(-1.2206345204260116).epsilon(1e-12));
    CHECK(small.residual > 0);
    CHECK(std::abs(small.dimension - 2.0) > std::abs(est.dimension - 2.0));

    CHECK_THROWS_AS(asymptotics::dimension_regression(100, 100, 9), std::invalid_argument);
    CHECK_THROWS_AS(asymptotics::dimension_regression(1, 100, 9), std::invalid_argument);
    CHECK_THROWS_AS(asymptotics::dimension_regression(2, 100, 1), std::invalid_argument);
}

TEST_CASE("fit_power_law on exact power laws") {
    const std::vector<long long> two{3, 300};
    const std::vector<double> v2{0.7 / 3, 0.7 / 300};
    const auto e2 = asymptotics::fit_power_law(two, v2);
    CHECK(e2.slope == Approx(-1.0).epsilon(1e-14));
    CHECK(e2.dimension == Approx(2.0).epsilon(1e-14));

    std::vector<long long> ns;
    std::vector<double> vs;
    for (long long n = 1; n <= 1 << 20; n *= 4) {
        ns.push_back(n);
        vs.push_back(5.0 * std::pow(static_cast<double>(n), -2.5));
    }
    const auto e = asymptotics::fit_power_law(ns, vs);
    CHECK(e.slope == Approx(-2.5).epsilon(1e-13));
    CHECK(e.intercept == Approx(std::log(5.0)).epsilon(1e-13));
    CHECK(e.residual <= 1e-13);

    const std::vector<long long> same{4, 4};
    const std::vector<double> vsame{1.0, 1.0};
    CHECK_THROWS_AS(asymptotics::fit_power_law(same, vsame), std::invalid_argument);
    const std::vector<double> neg{1.0, -1.0};
    CHECK_THROWS_AS(asymptotics::fit_power_law(two, neg), std::invalid_argument);
}

TEST_CASE("coefficient_estimate") {
    CHECK(asymptotics::coefficient_estimate(100) == Approx(1213.0 / 2400).epsilon(1e-15));
    CHECK(std::abs(asymptotics::coefficient_estimate(100'000) - 0.5) <= 6e-6);
    double prev = asymptotics::coefficient_estimate(1);
    for (long long n = 2; n <= 10'000; ++n) {
        const double c = asymptotics::coefficient_estimate(n);
        REQUIRE(c < prev);
        REQUIRE(c > 0.5);
        prev = c;
    }
    // n * excess - 1/2 == 13 / (24 n) exactly.
    for (long long n = 1; n <= 1000; ++n) {
        REQUIRE(closed_form::excess_exact(n) * n - closed_form::Rational(1, 2) == closed_form::Rational(13, 24 * n));
    }
}

}  // TEST_SUITE
