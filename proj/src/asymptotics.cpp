#include "cquant/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cquant/closed_form.hpp"

namespace cquant::asymptotics {

double excess(long long n) { return closed_form::excess(n); }

double dimension_direct(long long n) {
    if (n < 2) {
        throw std::domain_error("dimension_direct needs n >= 2, got " + std::to_string(n));
    }
    const double ex = excess(n);
    if (!(ex < 1.0)) {
        throw std::domain_error("excess error >= 1 at n = " + std::to_string(n));
    }
    return kOrder * std::log(static_cast<double>(n)) / -std::log(ex);
}

std::vector<long long> geometric_samples(long long n_min, long long n_max, long long samples) {
    if (n_min < 1 || n_max < n_min || samples < 1) {
        throw std::invalid_argument("geometric_samples: bad range");
    }
    std::vector<long long> ns;
    if (samples == 1 || n_min == n_max) {
        ns.push_back(n_min);
        return ns;
    }
    const double ratio = static_cast<double>(n_max) / static_cast<double>(n_min);
    for (long long k = 0; k < samples; ++k) {
        const double frac = static_cast<double>(k) / static_cast<double>(samples - 1);
        long long n = std::llround(static_cast<double>(n_min) * std::pow(ratio, frac));
        ns.push_back(std::clamp(n, n_min, n_max));
    }
    ns.front() = n_min;
    ns.back() = n_max;
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
}

RegressionEstimate fit_power_law(std::span<const long long> ns, std::span<const double> values) {
    if (ns.size() != values.size()) {
        throw std::invalid_argument("fit_power_law: size mismatch");
    }
    const std::size_t m = ns.size();
    std::vector<double> lx(m);
    std::vector<double> ly(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (ns[i] < 1 || !(values[i] > 0.0)) {
            throw std::invalid_argument("fit_power_law: samples must be positive");
        }
        lx[i] = std::log(static_cast<double>(ns[i]));
        ly[i] = std::log(values[i]);
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (m < 2 || !(sxx > 0.0)) {
        throw std::invalid_argument("fit_power_law: need at least two distinct sample points");
    }

    RegressionEstimate est;
    est.slope = sxy / sxx;
    est.intercept = my - est.slope * mx;
    est.dimension = kOrder / std::abs(est.slope);
    est.sample_range = {*std::min_element(ns.begin(), ns.end()), *std::max_element(ns.begin(), ns.end())};
    for (std::size_t i = 0; i < m; ++i) {
        est.residual = std::max(est.residual, std::abs(est.intercept + est.slope * lx[i] - ly[i]));
    }
    est.ns.assign(ns.begin(), ns.end());
    return est;
}

RegressionEstimate dimension_regression(long long n_min, long long n_max, long long samples) {
    if (n_min < 2 || n_max <= n_min || samples < 2) {
        throw std::invalid_argument("dimension_regression needs 2 <= n_min < n_max and samples >= 2");
    }
    const std::vector<long long> ns = geometric_samples(n_min, n_max, samples);
    std::vector<double> values(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        values[i] = excess(ns[i]);
    }
    return fit_power_law(ns, values);
}

double coefficient_estimate(long long n) {
    const auto scaled = closed_form::excess_exact(n) * n;
    return scaled.convert_to<double>();
}

}  // namespace cquant::asymptotics
