#include "adele/harmonic.hpp"

#include <cmath>
#include <numbers>

namespace adele {

Complex RotationNumber::to_complex() const {
    const double angle = 2.0 * std::numbers::pi * to_double(value_);
    return Complex(std::cos(angle), std::sin(angle));
}

RotationNumber canonical_character(const RadixTable& table, const FiniteAdele& x) {
    return RotationNumber(fractional_part(table, x));
}

RotationNumber character_at(const RadixTable& table, const FiniteAdele& xi,
                            const FiniteAdele& x) {
    const FiniteAdele product = mul(table, xi, x);
    if (product.precision() < 0)
        throw precision_error("character_at: product precision does not reach index 0");
    return canonical_character(table, product);
}

long character_rank(const RadixTable& table, const FiniteAdele& xi) {
    (void)table;
    const OrdResult o = ord(xi);
    if (!o.known)
        throw precision_error("character_rank: ord(xi) indeterminate (zero to precision " +
                              std::to_string(o.value) + ")");
    return o.value;
}

Rat annihilator_generator(const Rat& q) {
    if (q == 0) throw domain_error("annihilator_generator: q must be nonzero");
    return 1 / q;
}

Rat measure(const RadixTable& table, const Ball& region) { return table.psi_exp(region.n); }

Rat measure(const RadixTable& table, const Sphere& region) {
    return table.psi_exp(region.n) - table.psi_exp(region.n - 1);
}

Rat measure(const RadixTable& table, const ScaledUnit& region) {
    (void)table;
    if (region.q <= 0) throw domain_error("measure(ScaledUnit): q must be positive");
    return 1 / region.q;
}

Rat ball_character_integral(const RadixTable& table, long n, const FiniteAdele& xi) {
    const OrdResult o = ord(xi);
    if (!o.known)
        throw precision_error("ball_character_integral: ord(xi) indeterminate");
    // ||xi|| <= e^{-psi(n)}  <=>  ord(xi) >= n.
    return o.value >= n ? table.psi_exp(n) : Rat(0);
}

Rat sphere_character_integral(const RadixTable& table, long n, const FiniteAdele& xi) {
    const OrdResult o = ord(xi);
    if (!o.known)
        throw precision_error("sphere_character_integral: ord(xi) indeterminate");
    if (o.value >= n) return table.psi_exp(n) - table.psi_exp(n - 1);
    if (o.value == n - 1) return -table.psi_exp(n - 1);
    return Rat(0);  // ||xi|| >= e^{-psi(n-2)}
}

} // namespace adele
