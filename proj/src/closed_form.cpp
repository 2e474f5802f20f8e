#include "cquant/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace cquant::closed_form {

namespace {

void require_n(long long n) {
    if (n < 1 || n > kMaxN) {
        throw std::invalid_argument("n must lie in [1, 2^31 - 1], got " + std::to_string(n));
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

Quantizer optimal_points(long long n) {
    require_n(n);
    const ConstraintIndex t(n);
    std::vector<ConstraintPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const double denom = 4.0 * static_cast<double>(n);
    for (long long j = 1; j <= n; ++j) {
        pts.emplace_back(t, static_cast<double>(2 * j - 3) / denom);
    }
    return Quantizer(std::move(pts));
}

Rational vn_exact(long long n) {
    require_n(n);
    const Rational rn(n);
    return (4 * rn * rn + 12 * rn + 13) / (24 * rn * rn);
}

double vn(long long n) { return to_double(vn_exact(n)); }

Rational v_infinity_exact() { return Rational(1, 6); }

double v_infinity() { return 1.0 / 6.0; }

Rational excess_exact(long long n) {
    require_n(n);
    const Rational rn(n);
    return (12 * rn + 13) / (24 * rn * rn);
}

double excess(long long n) { return to_double(excess_exact(n)); }

std::vector<double> unconstrained_means(long long n) {
    require_n(n);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    const double denom = 2.0 * static_cast<double>(n);
    for (long long j = 1; j <= n; ++j) {
        out.push_back(static_cast<double>(2 * j - 1) / denom);
    }
    return out;
}

double dimension() noexcept { return 2.0; }

double coefficient() noexcept { return 0.5; }

Report report(long long n) {
    const Rational ex = excess_exact(n);
    return {n, optimal_points(n), vn(n), v_infinity(), to_double(ex), to_double(ex * n)};
}

}  // namespace cquant::closed_form
