#pragma once

#include <functional>

#include "cquant/geometry.hpp"

namespace cquant {

/// Closed subinterval [lo, hi] of the support [0,1].
class SupportInterval {
public:
    /// Throws std::invalid_argument unless 0 <= lo <= hi <= 1.
    SupportInterval(double lo, double hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double length() const noexcept { return hi_ - lo_; }

private:
    double lo_;
    double hi_;
};

/// Probability measure carried by the segment [0,1] x {0}.
///
/// The default instance is uniform and every operation on it is evaluated from
/// exact antiderivatives. A custom density switches to adaptive Gauss-Kronrod
/// quadrature; that path exists for reuse and is not the validated one.
class SegmentMeasure {
public:
    using Density = std::function<double(double)>;

    SegmentMeasure() = default;
    explicit SegmentMeasure(Density density);

    static SegmentMeasure uniform() { return SegmentMeasure(); }

    bool is_uniform() const noexcept { return !density_; }
    double density(double x) const;

    /// Absolute tolerance targeted by the quadrature path.
    static constexpr double kQuadratureTolerance = 1e-12;

private:
    friend double interval_mass(const SegmentMeasure&, const SupportInterval&);
    friend Point conditional_mean(const SegmentMeasure&, const SupportInterval&);
    friend double interval_distortion(const SegmentMeasure&, const SupportInterval&,
                                      const ConstraintPoint&);

    double integrate(const std::function<double(double)>& f, const SupportInterval& iv) const;

    Density density_;
};

double interval_mass(const SegmentMeasure& m, const SupportInterval& iv);

/// E(X | X in iv). Throws std::domain_error for a zero-mass interval.
Point conditional_mean(const SegmentMeasure& m, const SupportInterval& iv);

/// Integral over iv of the squared distance from (x,0) to embed(cp).
/// Zero-length intervals give 0.
double interval_distortion(const SegmentMeasure& m, const SupportInterval& iv,
                           const ConstraintPoint& cp);

/// Minimum of interval_distortion over S_t for the uniform measure.
double optimal_interval_distortion(const SupportInterval& iv, ConstraintIndex t);

/// Abscissa on S_t attaining optimal_interval_distortion: (a t + b t - 2) / (4 t).
double optimal_interval_abscissa(const SupportInterval& iv, ConstraintIndex t) noexcept;

}  // namespace cquant
