#include "cquant/measure.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <stdexcept>
#include <string>

namespace cquant {

SupportInterval::SupportInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
        throw std::invalid_argument("support interval [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "] is not inside [0,1]");
    }
}

SegmentMeasure::SegmentMeasure(Density density) : density_(std::move(density)) {}

double SegmentMeasure::density(double x) const {
    if (x < 0.0 || x > 1.0) {
        return 0.0;
    }
    return density_ ? density_(x) : 1.0;
}

double SegmentMeasure::integrate(const std::function<double(double)>& f,
                                 const SupportInterval& iv) const {
    if (iv.length() == 0.0) {
        return 0.0;
    }
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    const auto weighted = [&](double x) { return f(x) * density_(x); };
    // Relative tolerance is set so the absolute target is met for O(1) integrands.
    return gauss_kronrod<double, 31>::integrate(weighted, iv.lo(), iv.hi(), 15,
                                                kQuadratureTolerance, &error);
}

double interval_mass(const SegmentMeasure& m, const SupportInterval& iv) {
    if (m.is_uniform()) {
        return iv.length();
    }
    return m.integrate([](double) { return 1.0; }, iv);
}

Point conditional_mean(const SegmentMeasure& m, const SupportInterval& iv) {
    const double mass = interval_mass(m, iv);
    if (!(mass > 0.0)) {
        throw std::domain_error("conditional mean of a zero-mass interval [" +
                                std::to_string(iv.lo()) + ", " + std::to_string(iv.hi()) + "]");
    }
    if (m.is_uniform()) {
        return {0.5 * (iv.lo() + iv.hi()), 0.0};
    }
    return {m.integrate([](double x) { return x; }, iv) / mass, 0.0};
}

double interval_distortion(const SegmentMeasure& m, const SupportInterval& iv,
                           const ConstraintPoint& cp) {
    const double ax = cp.x();
    const double ay = cp.y();
    if (m.is_uniform()) {
        // int_a^b (x - ax)^2 + ay^2 dx with the cubic difference factored to
        // avoid cancellation: (u^3 - v^3)/3 = (u - v)(u^2 + uv + v^2)/3.
        const double u = iv.hi() - ax;
        const double v = iv.lo() - ax;
        return iv.length() * ((u * u + u * v + v * v) / 3.0 + ay * ay);
    }
    return m.integrate([ax, ay](double x) { return (x - ax) * (x - ax) + ay * ay; }, iv);
}

double optimal_interval_distortion(const SupportInterval& iv, ConstraintIndex t) {
    const double a = iv.lo();
    const double b = iv.hi();
    const double tt = static_cast<double>(t.value());
    return iv.length() * (tt * tt * (5.0 * a * a + 2.0 * a * b + 5.0 * b * b) +
                          12.0 * tt * (a + b) + 12.0) /
           (24.0 * tt * tt);
}

double optimal_interval_abscissa(const SupportInterval& iv, ConstraintIndex t) noexcept {
    const double tt = static_cast<double>(t.value());
    return (iv.lo() * tt + iv.hi() * tt - 2.0) / (4.0 * tt);
}

}  // namespace cquant
