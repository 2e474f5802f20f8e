#include "cquant/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cquant/errors.hpp"

namespace cquant {

Quantizer::Quantizer(std::vector<ConstraintPoint> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw InvalidQuantizer("a quantizer needs at least one point");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(forward_map(points_[i - 1]) < forward_map(points_[i]))) {
            throw InvalidQuantizer("feet must be strictly increasing (points " +
                                   std::to_string(i - 1) + " and " + std::to_string(i) + ")");
        }
    }
}

std::vector<double> Quantizer::feet() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const auto& p : points_) {
        out.push_back(forward_map(p));
    }
    return out;
}

bool Quantizer::single_constraint() const noexcept {
    return std::all_of(points_.begin(), points_.end(),
                       [&](const ConstraintPoint& p) { return p.index() == points_.front().index(); });
}

Partition::Partition(std::vector<double> breakpoints) : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
        throw InvalidQuantizer("partition must run from 0 to 1");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (breakpoints_[i] < breakpoints_[i - 1]) {
            throw InvalidQuantizer("breakpoints decrease at position " + std::to_string(i));
        }
    }
}

namespace {

// On mixed constraints, consecutive-by-foot neighbours need not be Voronoi
// neighbours. The set where another generator beats the owner of a cell is a
// half-line, so checking both cell ends is enough.
void check_voronoi(const Quantizer& q, const Partition& part) {
    const auto pts = q.points();
    for (std::size_t i = 0; i < part.cells(); ++i) {
        const auto cell = part.cell(i);
        if (cell.length() == 0.0) {
            continue;
        }
        for (double x : {cell.lo(), cell.hi()}) {
            const double own = squared_distance({x, 0.0}, embed(pts[i]));
            for (std::size_t k = 0; k < pts.size(); ++k) {
                const double other = squared_distance({x, 0.0}, embed(pts[k]));
                if (other < own - 1e-12 * (1.0 + own)) {
                    throw InvalidQuantizer("point " + std::to_string(k) +
                                           " is nearer than the owner of cell " + std::to_string(i));
                }
            }
        }
    }
}

}  // namespace

Partition partition_of(const Quantizer& q) {
    std::vector<double> c;
    c.reserve(q.size() + 1);
    c.push_back(0.0);
    for (std::size_t i = 1; i < q.size(); ++i) {
        c.push_back(std::clamp(voronoi_breakpoint(q[i - 1], q[i]), 0.0, 1.0));
    }
    c.push_back(1.0);
    Partition part(std::move(c));
    if (!q.single_constraint()) {
        check_voronoi(q, part);
    }
    return part;
}

double distortion(const Quantizer& q, const SegmentMeasure& m) {
    const Partition part = partition_of(q);
    double total = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        total += interval_distortion(m, part.cell(i), q[i]);
    }
    return total;
}

StepResult lloyd_step(const Quantizer& q, ConstraintIndex t, const SegmentMeasure& m) {
    for (const auto& p : q.points()) {
        if (p.index() != t) {
            throw std::invalid_argument("lloyd_step: point on S_" + std::to_string(p.index().value()) +
                                        " but stepping on S_" + std::to_string(t.value()));
        }
    }
    const Partition part = partition_of(q);
    std::vector<ConstraintPoint> next;
    next.reserve(q.size());
    StepResult result{q, 0.0, 0};
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto cell = part.cell(i);
        if (!(interval_mass(m, cell) > 0.0)) {
            throw EmptyCell(i, "cell " + std::to_string(i) + " has zero mass");
        }
        const double foot = conditional_mean(m, cell).x;
        double x = 0.5 * (foot - t.offset());
        const double clamped = std::clamp(x, -t.offset(), 1.0);
        if (clamped != x) {
            ++result.clamped;
            x = clamped;
        }
        next.emplace_back(t, x);
        result.movement = std::max(result.movement, std::abs(forward_map(next.back()) - forward_map(q[i])));
    }
    result.quantizer = Quantizer(std::move(next));
    return result;
}

std::vector<double> perturbed_equispaced_feet(long long n) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    std::vector<double> feet;
    feet.reserve(static_cast<std::size_t>(n));
    const double dn = static_cast<double>(n);
    for (long long j = 1; j <= n; ++j) {
        double f = static_cast<double>(2 * j - 1) / (2.0 * dn);
        if (j % 2 == 1) {
            f += 0.1 / dn;
        }
        feet.push_back(f);
    }
    return feet;
}

SolverOutcome solve_fixed_constraint(long long n, ConstraintIndex t, const SolverConfig& cfg) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    if (!(cfg.tol > 0.0) || cfg.max_iter < 1) {
        throw std::invalid_argument("solver needs tol > 0 and max_iter >= 1");
    }
    std::vector<double> feet = cfg.init == InitKind::EquispacedFeet ? perturbed_equispaced_feet(n) : cfg.feet;
    if (feet.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("explicit initialization has " + std::to_string(feet.size()) +
                                    " feet, expected " + std::to_string(n));
    }
    std::vector<ConstraintPoint> start;
    start.reserve(feet.size());
    for (double f : feet) {
        start.push_back(inverse_map(t, f));
    }

    SolverOutcome out{Quantizer(std::move(start)), 0.0, 0, false, 0, {}};
    while (out.iterations < cfg.max_iter) {
        if (cfg.record_history) {
            out.history.push_back(distortion(out.quantizer));
        }
        StepResult step = lloyd_step(out.quantizer, t);
        out.quantizer = std::move(step.quantizer);
        out.clamp_events += step.clamped;
        ++out.iterations;
        if (step.movement <= cfg.tol) {
            out.converged = true;
            break;
        }
    }
    out.distortion = distortion(out.quantizer);
    if (cfg.record_history) {
        out.history.push_back(out.distortion);
    }
    return out;
}

ConstraintIndex best_constraint_index(const SupportInterval& iv, long long n) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    if (!(iv.length() > 0.0)) {
        throw std::invalid_argument("best_constraint_index needs a positive-length interval");
    }
    ConstraintIndex best(1);
    double best_value = optimal_interval_distortion(iv, best);
    for (long long t = 2; t <= n; ++t) {
        const double v = optimal_interval_distortion(iv, ConstraintIndex(t));
        if (v < best_value) {
            best_value = v;
            best = ConstraintIndex(t);
        }
    }
    return best;
}

}  // namespace cquant
