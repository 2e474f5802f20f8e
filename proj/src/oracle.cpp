#include "cquant/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cquant/errors.hpp"

namespace cquant::oracle {

double final_grid_step(const OracleConfig& cfg) noexcept {
    return std::ldexp(cfg.grid_step, -cfg.refine_rounds);
}

namespace {

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    std::vector<long long> indices;
    std::vector<double> xs;
};

// Strict total order: distortion, then indices, then abscissas.
bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) {
        return a.value < b.value;
    }
    if (a.indices != b.indices) {
        return a.indices < b.indices;
    }
    return a.xs < b.xs;
}

std::vector<double> grid_for(long long j, double step) {
    const ConstraintIndex idx(j);
    const auto [lo, hi] = feasible_foot_range(idx);
    const double first = std::max(lo - step, -idx.offset());
    const double last = std::min(hi + step, 1.0);
    std::vector<double> g;
    for (long long k = 0;; ++k) {
        const double x = first + static_cast<double>(k) * step;
        if (x > last + 1e-12 * step) {
            break;
        }
        g.push_back(std::min(x, last));
    }
    return g;
}

// Distortion of the configuration, or nullopt when it is not a valid
// quantizer (feet out of order, or a point with no Voronoi cell).
std::optional<double> evaluate(const std::vector<long long>& indices, const std::vector<double>& xs) {
    std::vector<ConstraintPoint> pts;
    pts.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        pts.emplace_back(ConstraintIndex(indices[i]), xs[i]);
        if (i > 0 && !(forward_map(pts[i - 1]) < forward_map(pts[i]))) {
            return std::nullopt;
        }
    }
    try {
        return distortion(Quantizer(std::move(pts)));
    } catch (const InvalidQuantizer&) {
        return std::nullopt;
    } catch (const DegenerateBoundary&) {
        return std::nullopt;
    }
}

class Search {
public:
    Search(long long n, const OracleConfig& cfg) : n_(n), cfg_(cfg) {
        if (n < 1) {
            throw std::invalid_argument("n must be >= 1");
        }
        if (n > kMaxExhaustiveN) {
            throw CapabilityError("exhaustive search supports n <= " + std::to_string(kMaxExhaustiveN) +
                                  ", got " + std::to_string(n));
        }
        if (!(cfg.grid_step > 0.0) || cfg.refine_rounds < 0) {
            throw std::invalid_argument("oracle needs grid_step > 0 and refine_rounds >= 0");
        }
        max_index_ = cfg.max_index == 0 ? n : cfg.max_index;
        if (max_index_ < 1 || max_index_ > n) {
            throw std::invalid_argument("max_index must lie in [1, n]");
        }
        for (long long j = 1; j <= max_index_; ++j) {
            grids_.push_back(grid_for(j, cfg.grid_step));
        }
        assignments_ = 1;
        for (long long i = 0; i < n; ++i) {
            assignments_ *= max_index_;
        }
    }

    // Outer work items: (assignment, grid position of the first point).
    long long outer_size() const {
        long long widest = 0;
        for (const auto& g : grids_) {
            widest = std::max<long long>(widest, static_cast<long long>(g.size()));
        }
        return assignments_ * widest;
    }

    long long widest() const { return outer_size() / assignments_; }

    // Scans every configuration belonging to one outer work item.
    void scan(long long item, Candidate& best, long long& evaluations) const {
        const long long assignment = item / widest();
        const auto first = static_cast<std::size_t>(item % widest());
        std::vector<long long> indices(static_cast<std::size_t>(n_));
        long long code = assignment;
        for (long long i = n_ - 1; i >= 0; --i) {
            indices[static_cast<std::size_t>(i)] = code % max_index_ + 1;
            code /= max_index_;
        }
        if (first >= grid(indices[0]).size()) {
            return;
        }
        std::vector<double> xs(static_cast<std::size_t>(n_));
        xs[0] = grid(indices[0])[first];
        recurse(1, indices, xs, best, evaluations);
    }

    Candidate refine(Candidate incumbent, long long& evaluations) const {
        double step = cfg_.grid_step;
        for (int round = 0; round < cfg_.refine_rounds; ++round) {
            step *= 0.5;
            const Candidate centre = incumbent;
            const std::size_t n = centre.xs.size();
            std::vector<int> offset(n, -2);
            while (true) {
                Candidate trial{0.0, centre.indices, centre.xs};
                for (std::size_t i = 0; i < n; ++i) {
                    const ConstraintIndex j(centre.indices[i]);
                    trial.xs[i] = std::clamp(centre.xs[i] + offset[i] * step, -j.offset(), 1.0);
                }
                ++evaluations;
                if (auto v = evaluate(trial.indices, trial.xs)) {
                    trial.value = *v;
                    if (better(trial, incumbent)) {
                        incumbent = std::move(trial);
                    }
                }
                std::size_t k = 0;
                while (k < n && offset[k] == 2) {
                    offset[k++] = -2;
                }
                if (k == n) {
                    break;
                }
                ++offset[k];
            }
        }
        return incumbent;
    }

    SolverOutcome finish(const Candidate& best, long long evaluations) const {
        if (!std::isfinite(best.value)) {
            throw std::runtime_error("oracle found no admissible configuration");
        }
        std::vector<ConstraintPoint> pts;
        for (std::size_t i = 0; i < best.xs.size(); ++i) {
            pts.emplace_back(ConstraintIndex(best.indices[i]), best.xs[i]);
        }
        return {Quantizer(std::move(pts)), best.value, evaluations, true, 0, {}};
    }

private:
    const std::vector<double>& grid(long long j) const { return grids_[static_cast<std::size_t>(j - 1)]; }

    void recurse(std::size_t depth, const std::vector<long long>& indices, std::vector<double>& xs,
                 Candidate& best, long long& evaluations) const {
        if (depth == indices.size()) {
            ++evaluations;
            if (auto v = evaluate(indices, xs)) {
                Candidate c{*v, indices, xs};
                if (better(c, best)) {
                    best = std::move(c);
                }
            }
            return;
        }
        const double prev_foot = 2.0 * xs[depth - 1] + ConstraintIndex(indices[depth - 1]).offset();
        const ConstraintIndex j(indices[depth]);
        for (double x : grid(indices[depth])) {
            if (2.0 * x + j.offset() <= prev_foot) {
                continue;
            }
            xs[depth] = x;
            recurse(depth + 1, indices, xs, best, evaluations);
        }
    }

    long long n_;
    OracleConfig cfg_;
    long long max_index_ = 0;
    long long assignments_ = 0;
    std::vector<std::vector<double>> grids_;
};

}  // namespace

SolverOutcome brute_force_serial(long long n, const OracleConfig& cfg) {
    const Search search(n, cfg);
    Candidate best;
    long long evaluations = 0;
    for (long long item = 0; item < search.outer_size(); ++item) {
        search.scan(item, best, evaluations);
    }
    best = search.refine(std::move(best), evaluations);
    return search.finish(best, evaluations);
}

SolverOutcome brute_force(long long n, const OracleConfig& cfg) {
    const Search search(n, cfg);
    const long long items = search.outer_size();
    Candidate best;
    long long evaluations = 0;
#pragma omp parallel
    {
        Candidate local;
        long long local_evals = 0;
#pragma omp for schedule(dynamic, 1) nowait
        for (long long item = 0; item < items; ++item) {
            search.scan(item, local, local_evals);
        }
#pragma omp critical(cquant_oracle_reduce)
        {
            evaluations += local_evals;
            if (better(local, best)) {
                best = std::move(local);
            }
        }
    }
    best = search.refine(std::move(best), evaluations);
    return search.finish(best, evaluations);
}

namespace {

double nearest_squared(std::span<const Point> generators, double x) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& g : generators) {
        m = std::min(m, squared_distance({x, 0.0}, g));
    }
    return m;
}

std::vector<Point> embedded(const Quantizer& q) {
    std::vector<Point> out;
    out.reserve(q.size());
    for (const auto& p : q.points()) {
        out.push_back(embed(p));
    }
    return out;
}

void require_panels(long long panels) {
    if (panels < 1) {
        throw std::invalid_argument("riemann_distortion needs panels >= 1");
    }
}

}  // namespace

double riemann_distortion_serial(const Quantizer& q, long long panels) {
    require_panels(panels);
    const auto gens = embedded(q);
    const double h = 1.0 / static_cast<double>(panels);
    double sum = 0.0;
    for (long long k = 0; k < panels; ++k) {
        sum += nearest_squared(gens, (static_cast<double>(k) + 0.5) * h);
    }
    return sum * h;
}

double riemann_distortion(const Quantizer& q, long long panels) {
    require_panels(panels);
    const auto gens = embedded(q);
    const double h = 1.0 / static_cast<double>(panels);
    double sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
    for (long long k = 0; k < panels; ++k) {
        sum += nearest_squared(gens, (static_cast<double>(k) + 0.5) * h);
    }
    return sum * h;
}

}  // namespace cquant::oracle
