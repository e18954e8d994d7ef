#pragma once

#include "adele/finite_adele.hpp"
#include "adele/numeric.hpp"

namespace adele {

/// An element of Q/Z kept as an exact rational in [0,1); stands for the
/// unit-circle value exp(2*pi*i*r).
class RotationNumber {
public:
    RotationNumber() = default;
    explicit RotationNumber(const Rat& r) : value_(mod_one(r)) {}

    const Rat& value() const noexcept { return value_; }
    bool is_trivial() const noexcept { return value_ == 0; }

    RotationNumber operator+(const RotationNumber& o) const {
        return RotationNumber(value_ + o.value_);
    }
    RotationNumber operator-() const { return RotationNumber(-value_); }

    /// exp(2*pi*i*value) as a complex double.
    Complex to_complex() const;

    friend bool operator==(const RotationNumber&, const RotationNumber&) = default;

private:
    Rat value_ = 0;
};

/// Regions the Haar measure and the character integrals understand.
struct Ball { long n; };          // a^n = e^{-psi(n)} Zhat, measure e^{psi(n)}
struct Sphere { long n; };        // a^n \ a^{n-1}
struct ScaledUnit { Rat q; };     // q * Zhat, measure 1/q (q > 0)

/// chi(x) = exp(2*pi*i*{x}); needs precision >= 0.
RotationNumber canonical_character(const RadixTable& table, const FiniteAdele& x);

/// chi_xi(x) = chi(xi * x); the product precision must reach index 0.
RotationNumber character_at(const RadixTable& table, const FiniteAdele& xi, const FiniteAdele& x);

/// Rank of chi_xi: trivial on a^n for n <= rank, nontrivial on a^{rank+1}.
/// Equals ord(xi); throws if the order is indeterminate.
long character_rank(const RadixTable& table, const FiniteAdele& xi);

/// Generator of Ann(q Zhat) = q^{-1} Zhat.
Rat annihilator_generator(const Rat& q);

Rat measure(const RadixTable& table, const Ball& region);
Rat measure(const RadixTable& table, const Sphere& region);
Rat measure(const RadixTable& table, const ScaledUnit& region);

/// Integral of chi(-xi x) over the ball a^n: e^{psi(n)} when the character is
/// trivial there, 0 otherwise.
Rat ball_character_integral(const RadixTable& table, long n, const FiniteAdele& xi);

/// Integral of chi(-xi x) over the sphere S_n: the three-case closed form.
Rat sphere_character_integral(const RadixTable& table, long n, const FiniteAdele& xi);

} // namespace adele
