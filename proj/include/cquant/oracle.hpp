#pragma once

// Brute-force checks that share no partition or closed-form code with the
// solver path. Each kernel has an OpenMP version and a serial reference; the
// two must agree (bit-for-bit for brute_force).

#include "cquant/quantizer.hpp"

namespace cquant::oracle {

struct OracleConfig {
    double grid_step = 1e-2;
    long long max_index = 0;   // 0 means n
    int refine_rounds = 3;
};

/// Largest n handled by the exhaustive search.
inline constexpr long long kMaxExhaustiveN = 3;

/// Abscissa resolution after all refinement rounds.
double final_grid_step(const OracleConfig& cfg) noexcept;

/// Exhaustive search over constraint assignments in {1..max_index}^n and
/// grid positions on each constraint's feasible range (widened by one step),
/// followed by local refinement of the incumbent. Ties are broken toward lower
/// indices, then lower abscissas. SolverOutcome::iterations counts evaluated
/// candidates. Throws CapabilityError for n > 3.
SolverOutcome brute_force(long long n, const OracleConfig& cfg = {});
SolverOutcome brute_force_serial(long long n, const OracleConfig& cfg = {});

/// Midpoint rule for int_0^1 min_a |(x,0) - a|^2 dx with the minimum taken
/// pointwise over all generators.
double riemann_distortion(const Quantizer& q, long long panels);
double riemann_distortion_serial(const Quantizer& q, long long panels);

}  // namespace cquant::oracle
