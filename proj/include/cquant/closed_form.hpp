#pragma once

// Exact answers for the uniform measure on [0,1] with constraints S_j:
//   optimal points  a_j = (2j - 3) / (4n) on S_n,
//   error           V_n = (4n^2 + 12n + 13) / (24 n^2),
//   limit           V_inf = 1/6,
//   dimension 2 and coefficient 1/2.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cquant/quantizer.hpp"

namespace cquant::closed_form {

using Rational = boost::multiprecision::cpp_rational;

/// Largest n accepted by the closed forms.
inline constexpr long long kMaxN = 2'147'483'647;

Quantizer optimal_points(long long n);

Rational vn_exact(long long n);
double vn(long long n);

Rational v_infinity_exact();
double v_infinity();

/// V_n - V_inf = (12n + 13) / (24 n^2).
Rational excess_exact(long long n);
double excess(long long n);

/// Unconstrained optimal n-means (2j - 1)/(2n) on [0,1].
std::vector<double> unconstrained_means(long long n);

double dimension() noexcept;
double coefficient() noexcept;

struct Report {
    long long n = 0;
    Quantizer points;
    double vn = 0.0;
    double v_infinity = 0.0;
    double excess = 0.0;
    double scaled_excess = 0.0;
};

Report report(long long n);

}  // namespace cquant::closed_form
