#pragma once

// Plane geometry of the constraint family S_j: the segments
// y = x + 1/j, -1/j <= x <= 1, lying above the support [0,1] x {0}.

#include <utility>

namespace cquant {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Index j >= 1 of the constraint S_j.
class ConstraintIndex {
public:
    explicit ConstraintIndex(long long j);

    long long value() const noexcept { return j_; }
    /// 1/j, the vertical offset of S_j above y = x.
    double offset() const noexcept { return 1.0 / static_cast<double>(j_); }

    friend bool operator==(ConstraintIndex, ConstraintIndex) = default;
    friend auto operator<=>(ConstraintIndex, ConstraintIndex) = default;

private:
    long long j_;
};

/// A point of S_j stored by its abscissa; membership is enforced on
/// construction so solver iterates cannot drift off the constraint.
class ConstraintPoint {
public:
    /// Throws std::out_of_range unless -1/j <= x <= 1.
    ConstraintPoint(ConstraintIndex j, double x);

    ConstraintIndex index() const noexcept { return j_; }
    double x() const noexcept { return x_; }
    double y() const noexcept { return x_ + j_.offset(); }

    friend bool operator==(const ConstraintPoint&, const ConstraintPoint&) = default;

private:
    ConstraintIndex j_;
    double x_;
};

double squared_distance(const Point& p, const Point& q) noexcept;

/// Plane coordinates (x, x + 1/j).
Point embed(const ConstraintPoint& cp) noexcept;

/// Foot of the perpendicular from cp onto the x-axis: 2x + 1/j.
double forward_map(const ConstraintPoint& cp) noexcept;

/// Inverse of forward_map on S_j. Throws std::out_of_range when the
/// preimage (foot - 1/j)/2 falls outside [-1/j, 1].
ConstraintPoint inverse_map(ConstraintIndex j, double foot);

/// Abscissa range of S_j whose feet land inside [0,1]:
/// [-1/(2j), 1/2 - 1/(2j)].
std::pair<double, double> feasible_foot_range(ConstraintIndex j) noexcept;

/// Crossing x* of the bisector of embed(p), embed(q) with the x-axis.
/// Throws DegenerateBoundary when the embedded abscissas coincide.
double voronoi_breakpoint(const ConstraintPoint& p, const ConstraintPoint& q);

}  // namespace cquant
