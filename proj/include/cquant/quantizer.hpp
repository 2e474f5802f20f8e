#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cquant/geometry.hpp"
#include "cquant/measure.hpp"

namespace cquant {

/// Ordered set of n >= 1 constraint points with strictly increasing feet.
class Quantizer {
public:
    /// Throws InvalidQuantizer if empty or if feet are not strictly increasing.
    explicit Quantizer(std::vector<ConstraintPoint> points);

    std::span<const ConstraintPoint> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const ConstraintPoint& operator[](std::size_t i) const { return points_[i]; }

    std::vector<double> feet() const;
    /// True when every point lies on the same S_j.
    bool single_constraint() const noexcept;

private:
    std::vector<ConstraintPoint> points_;
};

/// Breakpoints 0 = c_0 <= c_1 <= ... <= c_n = 1 of the Voronoi cells on the
/// support. Zero-width cells can appear when a breakpoint is clamped into
/// [0,1]; decreasing breakpoints are rejected.
class Partition {
public:
    explicit Partition(std::vector<double> breakpoints);

    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    std::size_t cells() const noexcept { return breakpoints_.size() - 1; }
    SupportInterval cell(std::size_t i) const {
        return {breakpoints_[i], breakpoints_[i + 1]};
    }

private:
    std::vector<double> breakpoints_;
};

Partition partition_of(const Quantizer& q);

/// Sum over cells of interval_distortion; the quantization error of q.
double distortion(const Quantizer& q, const SegmentMeasure& m = {});

enum class InitKind { EquispacedFeet, ExplicitFeet };

struct SolverConfig {
    double tol = 1e-13;            // max foot movement per sweep
    long long max_iter = 100'000;
    InitKind init = InitKind::EquispacedFeet;
    std::vector<double> feet;      // used with InitKind::ExplicitFeet
    bool record_history = false;
};

struct StepResult {
    Quantizer quantizer;
    double movement = 0.0;     // max |foot change|
    std::size_t clamped = 0;   // centroids pulled back onto S_t
};

/// One centroid sweep on S_t: each point moves to inverse_map(t, mean of its
/// cell). Throws EmptyCell for a zero-mass cell and std::invalid_argument if
/// a point is not on S_t.
StepResult lloyd_step(const Quantizer& q, ConstraintIndex t, const SegmentMeasure& m = {});

struct SolverOutcome {
    Quantizer quantizer;
    double distortion = 0.0;
    long long iterations = 0;
    bool converged = false;
    std::size_t clamp_events = 0;
    std::vector<double> history;  // distortion before each sweep and at the end
};

/// Feet (2j-1)/(2n), shifted by 0.1/n on odd j so the start is not already
/// the fixed point.
std::vector<double> perturbed_equispaced_feet(long long n);

/// Iterates lloyd_step on S_t until the max foot movement drops to cfg.tol.
/// Non-convergence is reported through SolverOutcome::converged.
SolverOutcome solve_fixed_constraint(long long n, ConstraintIndex t, const SolverConfig& cfg = {});

/// argmin over t in {1..n} of optimal_interval_distortion(iv, t); ties go to
/// the smaller index.
ConstraintIndex best_constraint_index(const SupportInterval& iv, long long n);

}  // namespace cquant
