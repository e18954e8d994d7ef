#pragma once

#include <functional>

#include "adele/finite_adele.hpp"
#include "adele/numeric.hpp"

namespace adele {

/// Outcome of a series evaluation: on success tail_bound <= requested_eps.
struct SeriesResult {
    Complex value;
    double tail_bound = 0.0;
    long terms_used = 0;
    double requested_eps = 0.0;
};

enum class RadialRegion { UnitBall, All };

/// Integral of a radial profile: sum of f(psi_exp(n)) * measure(S_n) over the
/// region's sphere indices.  The profile must be nonincreasing in the radius;
/// the tail is certified by a dyadic upper Riemann sum of the comparison
/// integral.
SeriesResult radial_integral(const RadixTable& table,
                             const std::function<double(double)>& profile, RadialRegion region,
                             double eps);

/// Oscillatory transform of the radial kernel r^{s-1} against chi(-xi x):
/// sum_{n >= -ord(xi)} psi_exp(n)^{-s} (1 - radix(n-1)^{s-1}).
/// Needs Re(s) > 1 and a determinate order.
SeriesResult riesz_kernel(const RadixTable& table, Complex s, const FiniteAdele& xi, double eps);

/// riesz_kernel at xi = -1; ord(-1) = 0 makes this the plain radial series.
SeriesResult gamma_Af(const RadixTable& table, Complex s, double eps);

/// Transform of log||x||: -sum_{n >= -ord(xi)} psi_exp(n)^{-1} log radix(n-1).
SeriesResult log_norm_transform(const RadixTable& table, const FiniteAdele& xi, double eps);

/// Transform of 1/(||x||^2 + M^2) written as the telescoped sphere series.
SeriesResult cauchy_kernel_transform(const RadixTable& table, double m, const FiniteAdele& xi,
                                     double eps);

/// Integral of ||x||^{s-1} over Zhat: sum_{n >= 0} (1 - 1/radix(n)) psi_exp(n)^{-s};
/// needs Re(s) > 0 and equals 1 at s = 1.
SeriesResult unit_ball_zeta(const RadixTable& table, Complex s, double eps);

} // namespace adele
