#pragma once

#include <span>
#include <utility>
#include <vector>

namespace cquant::asymptotics {

/// Quantization order; the distance is squared Euclidean throughout.
inline constexpr double kOrder = 2.0;

struct RegressionEstimate {
    double slope = 0.0;
    double intercept = 0.0;
    double dimension = 0.0;          // kOrder / |slope|
    std::pair<long long, long long> sample_range{0, 0};
    double residual = 0.0;           // max |fit - data| in log space
    std::vector<long long> ns;       // sample points actually used
};

/// V_n - V_inf for the closed-form error sequence.
double excess(long long n);

/// 2 log n / (-log excess(n)). Throws std::domain_error when log n <= 0 or
/// excess(n) >= 1 (both happen at n = 1).
double dimension_direct(long long n);

/// Geometrically spaced integers from n_min to n_max inclusive, deduplicated.
std::vector<long long> geometric_samples(long long n_min, long long n_max, long long samples);

/// Least-squares line through (log n, log y). Throws std::invalid_argument
/// for fewer than two distinct abscissas or non-positive data.
RegressionEstimate fit_power_law(std::span<const long long> ns, std::span<const double> values);

/// fit_power_law over geometric_samples(n_min, n_max, samples) of excess().
RegressionEstimate dimension_regression(long long n_min, long long n_max, long long samples);

/// n^(r/kappa) * excess(n) at kappa = 2, i.e. n * excess(n).
double coefficient_estimate(long long n);

}  // namespace cquant::asymptotics
