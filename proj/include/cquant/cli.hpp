#pragma once

// Subcommands: solve, verify, curve, dimension.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cquant/quantizer.hpp"

namespace cquant::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

/// Closed-form providers consulted by `verify`; tests substitute broken ones.
struct VerifyHooks {
    std::function<Quantizer(long long)> optimal_points;
    std::function<double(long long)> vn;
};

VerifyHooks default_hooks();

/// Runs the CLI on args (program name excluded), writing results to out and
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifyHooks& hooks = default_hooks());

}  // namespace cquant::cli
