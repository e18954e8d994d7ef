#pragma once

#include <string>
#include <vector>

#include "adele/numeric.hpp"
#include "adele/radix_table.hpp"

namespace adele {

/// Order of a truncated adic series: either the index of the first nonzero
/// digit, or a certificate that every digit below the precision is zero.
struct OrdResult {
    bool known;
    long value;  // first nonzero index if known, else the precision bound

    static OrdResult Known(long gamma) { return {true, gamma}; }
    static OrdResult AtLeast(long n) { return {false, n}; }
};

// norm() cannot decide a value that is zero to precision; the exception
// carries the certified upper bound psi_exp(-N).
class indeterminate_norm_error : public error {
public:
    explicit indeterminate_norm_error(Rat bound)
        : error("norm indeterminate: value is zero to precision, norm <= " + to_string(bound)),
          bound_(std::move(bound)) {}
    const Rat& bound() const noexcept { return bound_; }

private:
    Rat bound_;
};

/// A truncated mixed-radix series
///   x = sum_{k=gamma}^{N-1} a_k e^{psi(k)}  +  (unknown element of psi_exp(N)*Zhat)
/// with 0 <= a_k < radix(k) and a_gamma != 0 unless all known digits vanish.
///
/// Values are immutable; all arithmetic is pure given a RadixTable.
class FiniteAdele {
public:
    /// Zero to precision N.
    static FiniteAdele zero(long precision);

    /// Digit extraction of a rational, known modulo psi_exp(N)*Zhat.
    static FiniteAdele from_rational(const RadixTable& table, const Rat& q, long precision);

    /// Parses the digit-string literal `g:a,a,...|N` or `zero|N`.
    static FiniteAdele parse(const std::string& text);

    /// Assembles from already-normalized digits (nonzero leading digit,
    /// order + #digits == precision).
    static FiniteAdele from_digits(long order, std::vector<long> digits, long precision);

    bool is_zero_to_precision() const noexcept { return digits_.empty(); }
    long order() const noexcept { return order_; }
    long precision() const noexcept { return precision_; }
    const std::vector<long>& digits() const noexcept { return digits_; }

    /// Digit at index k; zero outside the stored window (k < precision only).
    long digit(long k) const;

    /// The exact rational value of the stored digits.
    Rat truncated_value(const RadixTable& table) const;

    std::string to_digit_string() const;

    friend bool operator==(const FiniteAdele&, const FiniteAdele&) = default;

private:
    FiniteAdele(long order, std::vector<long> digits, long precision);

    long order_;                 // == precision_ when zero to precision
    std::vector<long> digits_;   // digits_[i] = a_{order_ + i}
    long precision_;
};

FiniteAdele add(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y);
FiniteAdele negate(const RadixTable& table, const FiniteAdele& x);
FiniteAdele sub(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y);
FiniteAdele mul(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y);

OrdResult ord(const FiniteAdele& x);

/// e^{-psi(ord x)}; throws indeterminate_norm_error when ord is AtLeast.
Rat norm(const RadixTable& table, const FiniteAdele& x);
Rat distance(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y);

/// The unique rational in [0,1) with x - {x} in Zhat. Needs precision >= 0.
Rat fractional_part(const RadixTable& table, const FiniteAdele& x);

} // namespace adele
