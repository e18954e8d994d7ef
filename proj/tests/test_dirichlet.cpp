#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adele/dirichlet.hpp"
#include "adele/errors.hpp"
#include "oracles.hpp"

using namespace adele;

namespace {

RadixTable table;

FiniteAdele embed(const Rat& q, long precision = 8) {
    return FiniteAdele::from_rational(table, q, precision);
}

// Exact partial sums of the series at integer s, frozen as references.
double riesz_reference(long s, long gamma, long terms) {
    Rat sum = 0;
    for (long n = -gamma; n < -gamma + terms; ++n) {
        Rat power = 1;
        for (long i = 0; i < s; ++i) power /= table.psi_exp(n);
        Rat osc = 1;
        for (long i = 0; i + 1 < s; ++i) osc *= table.radix(n - 1);
        sum += power * (1 - osc);
    }
    return to_double(sum);
}

// Upper bound for the integral of |log r| over the ball a^{-m}: uses
// log psi_exp(j) <= j(j+1)/2 * log 2 and measure psi_exp(-j).
double log_inner_bound(long m) {
    double bound = 0.0;
    for (long j = m; j < m + 80; ++j)
        bound += 0.5 * static_cast<double>(j) * static_cast<double>(j + 1) * std::log(2.0) *
                 std::pow(2.0, -j);
    return bound;
}

} // namespace

TEST_CASE("flat profile integrates to the unit ball measure") {
    const auto r = radial_integral(table, [](double) { return 1.0; }, RadialRegion::UnitBall, 1e-13);
    CHECK(std::abs(r.value - Complex(1)) < 1e-13);
    CHECK(r.tail_bound <= 1e-13);
    CHECK(r.terms_used >= 1);
}

TEST_CASE("log profile on the unit ball stays below one") {
    const auto r = radial_integral(
        table, [](double t) { return -std::log(t); }, RadialRegion::UnitBall, 1e-8);
    CHECK(r.value.real() > 0.0);
    CHECK(r.value.real() < 1.0);
    CHECK(r.tail_bound <= 1e-8);
}

TEST_CASE("divergent profile is refused with a convergence error") {
    CHECK_THROWS_AS(
        radial_integral(table, [](double t) { return 1.0 / t; }, RadialRegion::UnitBall, 1e-6),
        convergence_error);
}

TEST_CASE("riesz kernel at s=2 matches the exact partial sums") {
    const auto r = gamma_Af(table, Complex(2.0), 1e-10);
    CHECK(r.tail_bound <= 1e-10);
    CHECK(std::abs(r.value - riesz_reference(2, 0, 90)) < 2e-10);
    CHECK(std::abs(r.value.imag()) < 1e-14);

    // Telescoping cross-check: the transform over the full space equals the
    // unit-ball integral of the same kernel minus 2^{s-1} times the measure
    // of the ball that carries the single cancelling sphere.
    const auto zeta = unit_ball_zeta(table, Complex(2.0), 1e-12);
    CHECK(std::abs(r.value - (zeta.value - Complex(2.0))) < 1e-9);
}

TEST_CASE("riesz kernel at s=3: first term is -3") {
    const auto r = gamma_Af(table, Complex(3.0), 1e-10);
    CHECK(std::abs(r.value - riesz_reference(3, 0, 90)) < 2e-10);
    // All terms are negative and the n=0 term is 1 - 2^2.
    CHECK(r.value.real() < -3.0);
    CHECK(r.value.real() > -3.0 - 5.0 / 7.0);  // geometric bound on n >= 1

    const auto zeta = unit_ball_zeta(table, Complex(3.0), 1e-12);
    CHECK(std::abs(r.value - (zeta.value - Complex(4.0))) < 1e-9);
}

TEST_CASE("riesz kernel with a deep character starts high in the ladder") {
    const FiniteAdele xi = embed(Rat(1, 27720));  // order -8
    const auto r = riesz_kernel(table, Complex(2.0), xi, 1e-10);
    CHECK(std::abs(r.value - riesz_reference(2, -8, 90)) < 2e-10);
    // Geometric envelope from the first summed index n = 8.
    CHECK(std::abs(r.value) <= 3.0 * std::pow(2.0, -2.0 * 8.0) / (1.0 - 0.25));
}

TEST_CASE("riesz kernel domain and precision guards") {
    CHECK_THROWS_AS(riesz_kernel(table, Complex(1.0), embed(Rat(1)), 1e-8), domain_error);
    CHECK_THROWS_AS(riesz_kernel(table, Complex(0.5), embed(Rat(1)), 1e-8), domain_error);
    CHECK_THROWS_AS(riesz_kernel(table, Complex(2.0), FiniteAdele::zero(4), 1e-8),
                    precision_error);
}

TEST_CASE("log transform leads with -log 2 and certifies quickly") {
    const auto r = log_norm_transform(table, embed(Rat(1)), 1e-10);
    CHECK(r.tail_bound <= 1e-10);
    CHECK(r.terms_used <= 200);
    CHECK(r.value.real() <= -std::log(2.0));  // every term is negative

    const auto shifted = log_norm_transform(table, embed(Rat(2)), 1e-10);
    // gamma = 1 prepends the n = -1 term, -psi_exp(-1)^{-1} log radix(-2).
    const double lead = -to_double(1 / table.psi_exp(-1)) *
                        std::log(static_cast<double>(table.radix(-2)));
    CHECK(std::abs(shifted.value.real() - (lead + r.value.real())) < 2e-10);
}

TEST_CASE("cauchy transform leads with 3/10 at M=1") {
    const auto r = cauchy_kernel_transform(table, 1.0, embed(Rat(1)), 1e-10);
    CHECK(r.tail_bound <= 1e-10);
    CHECK(r.terms_used <= 200);
    // Later terms are positive and bounded by the stated geometric envelope.
    CHECK(r.value.real() > 0.3);
    CHECK(r.value.real() < 0.3 + 0.15 + 2.0 * std::pow(2.0, -1.0));

    CHECK_THROWS_AS(cauchy_kernel_transform(table, 0.0, embed(Rat(1)), 1e-8), domain_error);
    const auto large = cauchy_kernel_transform(table, 100.0, embed(Rat(1)), 1e-10);
    CHECK(std::abs(large.value) <= 4.0 / (100.0 * 100.0));
}

TEST_CASE("unit ball zeta telescopes at s=1 and obeys the monotone bound") {
    const auto one = unit_ball_zeta(table, Complex(1.0), 1e-12);
    CHECK(std::abs(one.value - Complex(1)) < 1e-12);
    // Upper Riemann sums dominate for a nonincreasing integrand (sigma <= 1)
    // and are dominated by sup = 1 times the ball measure otherwise.
    for (const double sigma : {0.5, 1.0, 2.0, 4.0}) {
        const auto z = unit_ball_zeta(table, Complex(sigma), 1e-12);
        if (sigma < 1.0)
            CHECK(z.value.real() < 1.0 / sigma);
        else {
            CHECK(z.value.real() >= 1.0 / sigma - 1e-12);
            CHECK(z.value.real() <= 1.0 + 1e-12);
        }
        CHECK(z.value.real() > 0.0);
    }
    CHECK_THROWS_AS(unit_ball_zeta(table, Complex(0.0), 1e-8), domain_error);
}

TEST_CASE("unit ball zeta at s=2 starts 1/2 + 1/6 + 1/72") {
    const auto z = unit_ball_zeta(table, Complex(2.0), 1e-12);
    double head = 0.5 + (2.0 / 3.0) / 4.0 + 0.5 / 36.0;
    CHECK(z.value.real() > head);
    CHECK(z.value.real() < head + std::pow(2.0, -2.0 * 3.0) / (1.0 - 0.25));
}

TEST_CASE("two-threshold agreement across every evaluator") {
    const FiniteAdele one = embed(Rat(1));
    const double eps = 1e-8;
    const auto pairs = {
        std::pair{riesz_kernel(table, Complex(2.0), one, eps).value,
                  riesz_kernel(table, Complex(2.0), one, eps / 100).value},
        std::pair{log_norm_transform(table, one, eps).value,
                  log_norm_transform(table, one, eps / 100).value},
        std::pair{cauchy_kernel_transform(table, 1.0, one, eps).value,
                  cauchy_kernel_transform(table, 1.0, one, eps / 100).value},
        std::pair{unit_ball_zeta(table, Complex(0.7), eps).value,
                  unit_ball_zeta(table, Complex(0.7), eps / 100).value},
    };
    for (const auto& [coarse, fine] : pairs) CHECK(std::abs(coarse - fine) < eps);
}

TEST_CASE("series values agree with brute-force window sums") {
    const long m = 3;
    const double window_measure = to_double(table.psi_exp(-m));
    const Rat one = 1;

    SUBCASE("riesz s=2, kernel r") {
        const auto series = riesz_kernel(table, Complex(2.0), embed(one), 1e-10);
        const double brute =
            oracle::radial_window_sum(table, [](const Rat& r) { return to_double(r); }, one, m);
        const double inner = window_measure * window_measure;  // sup r * measure
        CHECK(std::abs(series.value.real() - brute) <= series.tail_bound + inner);
    }
    SUBCASE("log kernel") {
        const auto series = log_norm_transform(table, embed(one), 1e-10);
        const double brute = oracle::radial_window_sum(
            table, [](const Rat& r) { return log_rational(r); }, one, m);
        CHECK(std::abs(series.value.real() - brute) <= series.tail_bound + log_inner_bound(m));
    }
    SUBCASE("cauchy kernel, M=1") {
        const auto series = cauchy_kernel_transform(table, 1.0, embed(one), 1e-10);
        const double brute = oracle::radial_window_sum(
            table,
            [](const Rat& r) {
                const double x = to_double(r);
                return 1.0 / (x * x + 1.0);
            },
            one, m);
        CHECK(std::abs(series.value.real() - brute) <= series.tail_bound + window_measure);
    }
    SUBCASE("deeper character xi = 5/12, cauchy kernel") {
        const Rat xi(5, 12);
        const long mm = 5;  // order(5/12) = -3, so the window clears gamma + 2
        const auto series = cauchy_kernel_transform(table, 1.0, embed(xi), 1e-10);
        const double brute = oracle::radial_window_sum(
            table,
            [](const Rat& r) {
                const double x = to_double(r);
                return 1.0 / (x * x + 1.0);
            },
            xi, mm);
        CHECK(std::abs(series.value.real() - brute) <=
              series.tail_bound + to_double(table.psi_exp(-mm)));
    }
}
