#include "cquant/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cquant/asymptotics.hpp"
#include "cquant/closed_form.hpp"
#include "cquant/errors.hpp"
#include "cquant/format.hpp"
#include "cquant/oracle.hpp"

namespace cquant::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    long long n = 0;
    std::string method = "closed-form";
    double tol = SolverConfig{}.tol;
    long long max_iter = SolverConfig{}.max_iter;
    double grid_step = oracle::OracleConfig{}.grid_step;
    std::string format = "json";
    std::string out;
};

struct VerifyOptions {
    long long n_max = 64;
    long long oracle_n_max = 3;
    double tol = SolverConfig{}.tol;
    long long max_iter = SolverConfig{}.max_iter;
    double grid_step = oracle::OracleConfig{}.grid_step;
};

struct CurveOptions {
    long long n_max = 0;
    std::string spacing = "geometric";
    std::string format = "csv";
    std::string out;
};

struct DimensionOptions {
    long long n_min = 64;
    long long n_max = 16384;
    long long samples = 9;
    std::string format = "json";
    std::string out;
};

// Writes to --out when given, otherwise to the command's output stream.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file " + path);
    }
    file << text;
}

std::string csv_real(double v) { return std::isfinite(v) ? format_real(v) : std::string(); }

// ---------------------------------------------------------------- solve

struct Record {
    long long n = 0;
    std::string method;
    long long constraint_index = 0;  // 0 when points sit on different constraints
    Quantizer quantizer;
    std::vector<double> breakpoints;
    double distortion = 0.0;
    double excess = 0.0;
    double scaled_excess = 0.0;
};

// Closed-form records take exact excess values; the others subtract V_inf.
Record with_excess(Record r) {
    r.excess = r.distortion - closed_form::v_infinity();
    r.scaled_excess = static_cast<double>(r.n) * r.excess;
    return r;
}

Record solve_record(const SolveOptions& o) {
    if (o.n < 1 || o.n > closed_form::kMaxN) {
        throw UsageError("--n must be a positive integer below 2^31");
    }
    if (o.method == "closed-form") {
        Quantizer q = closed_form::optimal_points(o.n);
        auto part = partition_of(q);
        const auto report = closed_form::report(o.n);
        return {o.n, o.method, o.n, std::move(q), {part.breakpoints().begin(), part.breakpoints().end()},
                report.vn, report.excess, report.scaled_excess};
    }
    if (o.method == "lloyd") {
        SolverConfig cfg;
        cfg.tol = o.tol;
        cfg.max_iter = o.max_iter;
        if (!(cfg.tol > 0.0) || cfg.max_iter < 1) {
            throw UsageError("--tol must be > 0 and --max-iter >= 1");
        }
        SolverOutcome res = solve_fixed_constraint(o.n, ConstraintIndex(o.n), cfg);
        if (!res.converged) {
            throw NumericalError("lloyd iteration did not converge within " + std::to_string(o.max_iter) +
                                 " sweeps");
        }
        auto part = partition_of(res.quantizer);
        return with_excess({o.n, o.method, o.n, std::move(res.quantizer),
                            {part.breakpoints().begin(), part.breakpoints().end()}, res.distortion});
    }
    if (o.method == "brute-force") {
        if (o.n > oracle::kMaxExhaustiveN) {
            throw UsageError("--method brute-force supports --n <= " + std::to_string(oracle::kMaxExhaustiveN));
        }
        if (!(o.grid_step > 0.0)) {
            throw UsageError("--grid-step must be > 0");
        }
        oracle::OracleConfig cfg;
        cfg.grid_step = o.grid_step;
        SolverOutcome res = oracle::brute_force(o.n, cfg);
        const long long idx = res.quantizer.single_constraint() ? res.quantizer[0].index().value() : 0;
        auto part = partition_of(res.quantizer);
        return with_excess({o.n, o.method, idx, std::move(res.quantizer),
                            {part.breakpoints().begin(), part.breakpoints().end()}, res.distortion});
    }
    throw UsageError("unknown --method " + o.method);
}

std::string render_json(const Record& r) {
    Json j;
    j["n"] = r.n;
    j["method"] = r.method;
    j["constraint_index"] = r.constraint_index;
    Json pts = Json::array();
    for (const auto& p : r.quantizer.points()) {
        const Point e = embed(p);
        pts.push_back(Json{{"j", p.index().value()}, {"x", p.x()}, {"plane", {e.x, e.y}}, {"foot", forward_map(p)}});
    }
    j["points"] = std::move(pts);
    j["breakpoints"] = r.breakpoints;
    j["distortion"] = r.distortion;
    j["excess"] = r.excess;
    j["scaled_excess"] = r.scaled_excess;
    return j.dump(2) + "\n";
}

std::string render_csv(const Record& r) {
    std::ostringstream s;
    s << "n,method,point,j,x,plane_x,plane_y,foot,cell_lo,cell_hi,distortion,excess,scaled_excess\n";
    for (std::size_t i = 0; i < r.quantizer.size(); ++i) {
        const auto& p = r.quantizer[i];
        const Point e = embed(p);
        s << r.n << ',' << r.method << ',' << i + 1 << ',' << p.index().value() << ',' << format_real(p.x())
          << ',' << format_real(e.x) << ',' << format_real(e.y) << ',' << format_real(forward_map(p)) << ','
          << format_real(r.breakpoints[i]) << ',' << format_real(r.breakpoints[i + 1]) << ','
          << format_real(r.distortion) << ',' << format_real(r.excess) << ','
          << format_real(r.scaled_excess) << '\n';
    }
    return s.str();
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    const Record r = solve_record(o);
    if (o.format == "json") {
        emit(render_json(r), o.out, out);
    } else if (o.format == "csv") {
        emit(render_csv(r), o.out, out);
    } else {
        throw UsageError("unknown --format " + o.format);
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

constexpr double kFeetTolerance = 1e-9;
constexpr double kDistortionTolerance = 1e-12;
constexpr double kOracleDistortionTolerance = 1e-5;

struct VerifyRow {
    long long n = 0;
    double feet_dev = 0.0;
    double distortion_dev = 0.0;
    bool converged = false;
    std::string error;
    bool has_oracle = false;
    long long oracle_index = 0;
    double oracle_feet_dev = 0.0;
    double oracle_distortion_dev = 0.0;
};

double max_feet_deviation(const Quantizer& a, const Quantizer& b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dev = std::max(dev, std::abs(forward_map(a[i]) - forward_map(b[i])));
    }
    return dev;
}

VerifyRow verify_one(long long n, const VerifyOptions& o, const VerifyHooks& hooks) {
    VerifyRow row;
    row.n = n;
    try {
        const Quantizer reference = hooks.optimal_points(n);
        const double reference_vn = hooks.vn(n);
        SolverConfig cfg;
        cfg.tol = o.tol;
        cfg.max_iter = o.max_iter;
        const SolverOutcome res = solve_fixed_constraint(n, ConstraintIndex(n), cfg);
        row.converged = res.converged;
        row.feet_dev = max_feet_deviation(res.quantizer, reference);
        row.distortion_dev = std::abs(res.distortion - reference_vn);
        if (n <= o.oracle_n_max) {
            oracle::OracleConfig ocfg;
            ocfg.grid_step = o.grid_step;
            const SolverOutcome orc = oracle::brute_force(n, ocfg);
            row.has_oracle = true;
            row.oracle_index = orc.quantizer.single_constraint() ? orc.quantizer[0].index().value() : 0;
            row.oracle_feet_dev = max_feet_deviation(orc.quantizer, reference);
            row.oracle_distortion_dev = std::abs(orc.distortion - reference_vn);
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<std::string> row_failures(const VerifyRow& r, const VerifyOptions& o) {
    std::vector<std::string> f;
    const std::string tag = "n=" + std::to_string(r.n) + ": ";
    if (!r.error.empty()) {
        f.push_back(tag + r.error);
        return f;
    }
    if (!r.converged) f.push_back(tag + "lloyd did not converge");
    if (!(r.feet_dev <= kFeetTolerance)) f.push_back(tag + "lloyd feet deviation " + format_real(r.feet_dev));
    if (!(r.distortion_dev <= kDistortionTolerance))
        f.push_back(tag + "lloyd distortion deviation " + format_real(r.distortion_dev));
    if (r.has_oracle) {
        if (r.oracle_index != r.n) f.push_back(tag + "oracle chose constraint " + std::to_string(r.oracle_index));
        if (!(r.oracle_feet_dev <= 2.0 * o.grid_step))
            f.push_back(tag + "oracle feet deviation " + format_real(r.oracle_feet_dev));
        if (!(r.oracle_distortion_dev <= kOracleDistortionTolerance))
            f.push_back(tag + "oracle distortion deviation " + format_real(r.oracle_distortion_dev));
    }
    return f;
}

int cmd_verify(const VerifyOptions& o, const VerifyHooks& hooks, std::ostream& out, std::ostream& err) {
    if (o.n_max < 1 || o.n_max > closed_form::kMaxN) {
        throw UsageError("--n-max must be >= 1");
    }
    if (o.oracle_n_max < 0 || o.oracle_n_max > oracle::kMaxExhaustiveN) {
        throw UsageError("--oracle-n-max must lie in [0, " + std::to_string(oracle::kMaxExhaustiveN) + "]");
    }
    if (!(o.tol > 0.0) || o.max_iter < 1 || !(o.grid_step > 0.0)) {
        throw UsageError("--tol, --max-iter and --grid-step must be positive");
    }
    std::vector<VerifyRow> rows(static_cast<std::size_t>(o.n_max));
#pragma omp parallel for schedule(dynamic, 1)
    for (long long n = o.n_max; n >= 1; --n) {
        rows[static_cast<std::size_t>(n - 1)] = verify_one(n, o, hooks);
    }

    std::vector<std::string> failures;
    out << "n,feet_dev,distortion_dev,oracle_index,oracle_feet_dev,oracle_distortion_dev,status\n";
    for (const auto& r : rows) {
        const auto f = row_failures(r, o);
        out << r.n << ',' << format_real(r.feet_dev) << ',' << format_real(r.distortion_dev) << ',';
        if (r.has_oracle) {
            out << r.oracle_index << ',' << format_real(r.oracle_feet_dev) << ','
                << format_real(r.oracle_distortion_dev);
        } else {
            out << ",,";
        }
        out << ',' << (f.empty() ? "ok" : "FAIL") << '\n';
        failures.insert(failures.end(), f.begin(), f.end());
    }
    if (failures.empty()) {
        out << "verify: ok\n";
        return kOk;
    }
    for (const auto& f : failures) {
        err << "verify: " << f << '\n';
    }
    out << "verify: " << failures.size() << " failure(s)\n";
    return kVerifyFailed;
}

// ---------------------------------------------------------------- curve

std::vector<long long> curve_ns(long long n_max, const std::string& spacing) {
    std::vector<long long> ns;
    if (spacing == "linear") {
        for (long long n = 1; n <= n_max; ++n) ns.push_back(n);
    } else if (spacing == "geometric") {
        for (long long n = 1; n <= n_max; n *= 2) ns.push_back(n);
        if (ns.back() != n_max) ns.push_back(n_max);
    } else {
        throw UsageError("unknown --spacing " + spacing);
    }
    return ns;
}

int cmd_curve(const CurveOptions& o, std::ostream& out) {
    if (o.n_max < 1 || o.n_max > closed_form::kMaxN) {
        throw UsageError("--n-max must be a positive integer below 2^31");
    }
    if (o.format != "csv" && o.format != "json") {
        throw UsageError("unknown --format " + o.format);
    }
    const std::vector<long long> ns = curve_ns(o.n_max, o.spacing);
    struct Row {
        double vn, excess, scaled, dim;
    };
    std::vector<Row> rows(ns.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const long long n = ns[i];
        const double dim = n >= 2 ? asymptotics::dimension_direct(n) : std::numeric_limits<double>::quiet_NaN();
        rows[i] = {closed_form::vn(n), asymptotics::excess(n), asymptotics::coefficient_estimate(n), dim};
    }

    std::ostringstream s;
    if (o.format == "csv") {
        s << "n,v_n,excess,scaled_excess,dim_direct\n";
        for (std::size_t i = 0; i < ns.size(); ++i) {
            s << ns[i] << ',' << format_real(rows[i].vn) << ',' << format_real(rows[i].excess) << ','
              << format_real(rows[i].scaled) << ',' << csv_real(rows[i].dim) << '\n';
        }
    } else {
        Json arr = Json::array();
        for (std::size_t i = 0; i < ns.size(); ++i) {
            Json row;
            row["n"] = ns[i];
            row["v_n"] = rows[i].vn;
            row["excess"] = rows[i].excess;
            row["scaled_excess"] = rows[i].scaled;
            row["dim_direct"] = std::isfinite(rows[i].dim) ? Json(rows[i].dim) : Json(nullptr);
            arr.push_back(std::move(row));
        }
        s << Json{{"spacing", o.spacing}, {"rows", std::move(arr)}}.dump(2) << '\n';
    }
    emit(s.str(), o.out, out);
    return kOk;
}

// ---------------------------------------------------------------- dimension

int cmd_dimension(const DimensionOptions& o, std::ostream& out) {
    if (o.n_min < 2 || o.n_max <= o.n_min || o.samples < 2 || o.n_max > closed_form::kMaxN) {
        throw UsageError("dimension needs 2 <= --n-min < --n-max and --samples >= 2");
    }
    const auto est = asymptotics::dimension_regression(o.n_min, o.n_max, o.samples);
    std::ostringstream s;
    if (o.format == "json") {
        Json j;
        j["n_min"] = o.n_min;
        j["n_max"] = o.n_max;
        j["samples"] = o.samples;
        j["ns"] = est.ns;
        j["slope"] = est.slope;
        j["intercept"] = est.intercept;
        j["dimension"] = est.dimension;
        j["residual"] = est.residual;
        s << j.dump(2) << '\n';
    } else if (o.format == "text") {
        s << "n_min: " << o.n_min << "\nn_max: " << o.n_max << "\nsamples: " << est.ns.size()
          << "\nslope: " << format_real(est.slope) << "\nintercept: " << format_real(est.intercept)
          << "\ndimension: " << format_real(est.dimension) << "\nresidual: " << format_real(est.residual)
          << '\n';
    } else {
        throw UsageError("unknown --format " + o.format);
    }
    emit(s.str(), o.out, out);
    return kOk;
}

}  // namespace

VerifyHooks default_hooks() {
    return {[](long long n) { return closed_form::optimal_points(n); },
            [](long long n) { return closed_form::vn(n); }};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const VerifyHooks& hooks) {
    CLI::App app{"Constrained quantization of the uniform distribution on [0,1] with diagonal constraints"};
    app.name("cquant");
    app.require_subcommand(1);

    SolveOptions solve;
    auto* sc = app.add_subcommand("solve", "Optimal n-point constrained quantizer");
    sc->add_option("--n", solve.n, "Number of points")->required();
    sc->add_option("--method", solve.method, "closed-form | lloyd | brute-force")->capture_default_str();
    sc->add_option("--tol", solve.tol, "Lloyd tolerance on max foot movement")->capture_default_str();
    sc->add_option("--max-iter", solve.max_iter, "Lloyd sweep cap")->capture_default_str();
    sc->add_option("--grid-step", solve.grid_step, "Brute-force coarse grid step")->capture_default_str();
    sc->add_option("--format", solve.format, "json | csv")->capture_default_str();
    sc->add_option("--out", solve.out, "Output file (default stdout)");

    VerifyOptions verify;
    auto* vc = app.add_subcommand("verify", "Cross-check Lloyd and brute force against the closed form");
    vc->add_option("--n-max", verify.n_max)->capture_default_str();
    vc->add_option("--oracle-n-max", verify.oracle_n_max)->capture_default_str();
    vc->add_option("--tol", verify.tol)->capture_default_str();
    vc->add_option("--max-iter", verify.max_iter)->capture_default_str();
    vc->add_option("--grid-step", verify.grid_step)->capture_default_str();

    CurveOptions curve;
    auto* cc = app.add_subcommand("curve", "Error sequence table for plotting");
    cc->add_option("--n-max", curve.n_max)->required();
    cc->add_option("--spacing", curve.spacing, "linear | geometric")->capture_default_str();
    cc->add_option("--format", curve.format, "csv | json")->capture_default_str();
    cc->add_option("--out", curve.out, "Output file (default stdout)");

    DimensionOptions dim;
    auto* dc = app.add_subcommand("dimension", "Log-log regression estimate of the quantization dimension");
    dc->add_option("--n-min", dim.n_min)->capture_default_str();
    dc->add_option("--n-max", dim.n_max)->capture_default_str();
    dc->add_option("--samples", dim.samples)->capture_default_str();
    dc->add_option("--format", dim.format, "json | text")->capture_default_str();
    dc->add_option("--out", dim.out, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (sc->parsed()) return cmd_solve(solve, out);
        if (vc->parsed()) return cmd_verify(verify, hooks, out, err);
        if (cc->parsed()) return cmd_curve(curve, out);
        if (dc->parsed()) return cmd_dimension(dim, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kUsage;
}

}  // namespace cquant::cli
