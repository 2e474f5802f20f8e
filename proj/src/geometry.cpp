#include "cquant/geometry.hpp"

#include <stdexcept>
#include <string>

#include "cquant/errors.hpp"

namespace cquant {

ConstraintIndex::ConstraintIndex(long long j) : j_(j) {
    if (j < 1) {
        throw std::invalid_argument("constraint index must be >= 1, got " + std::to_string(j));
    }
}

ConstraintPoint::ConstraintPoint(ConstraintIndex j, double x) : j_(j), x_(x) {
    if (!(x >= -j.offset() && x <= 1.0)) {
        throw std::out_of_range("abscissa " + std::to_string(x) + " is not on S_" +
                                std::to_string(j.value()));
    }
}

double squared_distance(const Point& p, const Point& q) noexcept {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Point embed(const ConstraintPoint& cp) noexcept { return {cp.x(), cp.y()}; }

double forward_map(const ConstraintPoint& cp) noexcept {
    return 2.0 * cp.x() + cp.index().offset();
}

ConstraintPoint inverse_map(ConstraintIndex j, double foot) {
    return ConstraintPoint(j, 0.5 * (foot - j.offset()));
}

std::pair<double, double> feasible_foot_range(ConstraintIndex j) noexcept {
    const double half = 0.5 * j.offset();
    return {-half, 0.5 - half};
}

double voronoi_breakpoint(const ConstraintPoint& p, const ConstraintPoint& q) {
    // rho(p,(x,0)) = rho(q,(x,0))  <=>  2x(a_q - a_p) = a_q^2 + b_q^2 - a_p^2 - b_p^2.
    // Differences are formed in constraint coordinates so that two points on
    // the same S_j give db == da exactly and the result is a_p + a_q + 1/j.
    const double da = q.x() - p.x();
    if (da == 0.0) {
        throw DegenerateBoundary("generators share the abscissa " + std::to_string(p.x()));
    }
    const double db = da + (q.index().offset() - p.index().offset());
    const double numerator = da * (q.x() + p.x()) + db * (q.y() + p.y());
    return numerator / (2.0 * da);
}

}  // namespace cquant
