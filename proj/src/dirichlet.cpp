#include "adele/dirichlet.hpp"

#include <cmath>

#include "adele/errors.hpp"
#include "adele/radix_table.hpp"

namespace adele {

namespace {

constexpr long kTermBudget = 600;
constexpr long kDyadicBudget = 4096;

long known_order(const FiniteAdele& xi) {
    const OrdResult o = ord(xi);
    if (!o.known) throw precision_error("character order is indeterminate at this precision");
    return o.value;
}

Complex rational_power(const Rat& base, Complex exponent) {
    return std::exp(exponent * log_rational(base));
}

// Upper bound for the integral of a nonincreasing profile over (0, r]:
// dyadic upper Riemann sum from the right endpoint inward.  Returns an
// unusable bound (> eps) when the sum does not settle within budget.
double inner_tail_bound(const std::function<double(double)>& profile, double r, double eps) {
    double bound = 0.0;
    double width = r / 2.0;
    for (long j = 0; j < kDyadicBudget; ++j) {
        const double term = profile(width) * width;
        bound += term;
        if (bound > eps) return bound;
        width /= 2.0;
        if (term < eps * 1e-6) return bound + term;  // remaining boxes are dominated
    }
    return eps * 2.0;
}

// Upper bound for the integral over [r, infinity): dyadic boxes growing
// outward, sup taken at the left endpoint.
double outer_tail_bound(const std::function<double(double)>& profile, double r, double eps) {
    double bound = 0.0;
    double left = r;
    for (long j = 0; j < kDyadicBudget; ++j) {
        const double term = profile(left) * left;
        bound += term;
        if (bound > eps) return bound;
        left *= 2.0;
        if (term < eps * 1e-6) return bound + term;
    }
    return eps * 2.0;
}

} // namespace

SeriesResult radial_integral(const RadixTable& table,
                             const std::function<double(double)>& profile, RadialRegion region,
                             double eps) {
    SeriesResult out;
    out.requested_eps = eps;
    const double budget = (region == RadialRegion::All) ? eps / 2.0 : eps;
    double inner = 0.0;
    // Spheres S_0, S_{-1}, ... shrinking into the origin.
    for (long m = 0; m < kTermBudget; ++m) {
        const long n = -m;
        out.value += profile(to_double(table.psi_exp(n))) *
                     to_double(table.psi_exp(n) - table.psi_exp(n - 1));
        ++out.terms_used;
        inner = inner_tail_bound(profile, to_double(table.psi_exp(n - 1)), budget);
        if (inner <= budget) break;
    }
    if (region == RadialRegion::UnitBall) {
        out.tail_bound = inner;
        if (out.tail_bound > eps) throw convergence_error("inner tail not certified within budget");
        return out;
    }
    double outer = 0.0;
    for (long n = 1; n < kTermBudget; ++n) {
        out.value += profile(to_double(table.psi_exp(n))) *
                     to_double(table.psi_exp(n) - table.psi_exp(n - 1));
        ++out.terms_used;
        outer = outer_tail_bound(profile, to_double(table.psi_exp(n)), eps / 2.0);
        if (outer <= eps / 2.0) break;
    }
    out.tail_bound = inner + outer;
    if (out.tail_bound > eps) throw convergence_error("tail not certified within budget");
    return out;
}

SeriesResult riesz_kernel(const RadixTable& table, Complex s, const FiniteAdele& xi, double eps) {
    const double sigma = s.real();
    if (sigma <= 1.0) throw domain_error("riesz kernel needs Re(s) > 1");
    const long gamma = known_order(xi);
    SeriesResult out;
    out.requested_eps = eps;
    // For n >= 1, psi_exp(n)^{-sigma} <= 2^{-sigma n} and
    // psi_exp(n)^{-sigma} radix(n-1)^{sigma-1} <= 2^{sigma-1} 2^{-sigma n},
    // so |term_n| <= (1 + 2^{sigma-1}) 2^{-sigma n} and the tail is geometric.
    const double ratio = std::pow(2.0, -sigma);
    const double lead = 1.0 + std::pow(2.0, sigma - 1.0);
    for (long n = -gamma; n - (-gamma) < kTermBudget; ++n) {
        const Complex term = rational_power(table.psi_exp(n), -s) *
                             (1.0 - rational_power(Rat(table.radix(n - 1)), s - 1.0));
        out.value += term;
        ++out.terms_used;
        if (n < 1) continue;
        out.tail_bound = lead * std::pow(2.0, -sigma * static_cast<double>(n + 1)) / (1.0 - ratio);
        if (out.tail_bound <= eps) return out;
    }
    throw convergence_error("riesz kernel tail not certified within budget");
}

SeriesResult gamma_Af(const RadixTable& table, Complex s, double eps) {
    return riesz_kernel(table, s, FiniteAdele::from_rational(table, Rat(-1), 4), eps);
}

SeriesResult log_norm_transform(const RadixTable& table, const FiniteAdele& xi, double eps) {
    const long gamma = known_order(xi);
    SeriesResult out;
    out.requested_eps = eps;
    for (long n = -gamma; n - (-gamma) < kTermBudget; ++n) {
        out.value -= to_double(1 / table.psi_exp(n)) *
                     std::log(static_cast<double>(table.radix(n - 1)));
        ++out.terms_used;
        if (n < 2) continue;
        // log radix(n-1) <= n log 2 (Bertrand) and psi_exp(n) >= 2^n:
        // the tail past n is log 2 * (n+2) * 2^{-n}.
        out.tail_bound = std::log(2.0) * static_cast<double>(n + 2) * std::pow(2.0, -n);
        if (out.tail_bound <= eps) return out;
    }
    throw convergence_error("log transform tail not certified within budget");
}

SeriesResult cauchy_kernel_transform(const RadixTable& table, double m, const FiniteAdele& xi,
                                     double eps) {
    if (!(m > 0.0)) throw domain_error("cauchy kernel needs M > 0");
    const long gamma = known_order(xi);
    SeriesResult out;
    out.requested_eps = eps;
    const double m2 = m * m;
    for (long n = -gamma; n - (-gamma) < kTermBudget; ++n) {
        const double rn = to_double(1 / table.psi_exp(n));
        const double rp = to_double(1 / table.psi_exp(n - 1));
        out.value += to_double(1 / table.psi_exp(n)) * (1.0 / (rn * rn + m2) - 1.0 / (rp * rp + m2));
        ++out.terms_used;
        if (n < 1) continue;
        out.tail_bound = 2.0 * std::pow(2.0, -n) / m2;
        if (out.tail_bound <= eps) return out;
    }
    throw convergence_error("cauchy kernel tail not certified within budget");
}

SeriesResult unit_ball_zeta(const RadixTable& table, Complex s, double eps) {
    const double sigma = s.real();
    if (sigma <= 0.0) throw domain_error("unit ball zeta needs Re(s) > 0");
    SeriesResult out;
    out.requested_eps = eps;
    const double ratio = std::pow(2.0, -sigma);
    for (long n = 0; n < kTermBudget; ++n) {
        out.value += (1.0 - 1.0 / static_cast<double>(table.radix(n))) *
                     rational_power(table.psi_exp(n), -s);
        ++out.terms_used;
        out.tail_bound = std::pow(2.0, -sigma * static_cast<double>(n + 1)) / (1.0 - ratio);
        if (out.tail_bound <= eps) return out;
    }
    throw convergence_error("unit ball zeta tail not certified within budget");
}

} // namespace adele
