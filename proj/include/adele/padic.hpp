#pragma once

#include <map>
#include <vector>

#include "adele/finite_adele.hpp"
#include "adele/numeric.hpp"

namespace adele {

/// A p-adic approximation: value known modulo p^precision, stored as
/// valuation + base-p digits of the unit part. Kept deliberately independent
/// of the mixed-radix code path so it can act as a correctness oracle.
class PadicApprox {
public:
    /// Zero to precision m (value in p^m Z_p).
    static PadicApprox zero(long p, long precision);

    /// Image of a rational under Q -> Q_p, known mod p^precision.
    static PadicApprox from_rational(long p, const Rat& q, long precision);

    bool is_zero_to_precision() const noexcept { return digits_.empty(); }
    long prime() const noexcept { return prime_; }
    long valuation() const noexcept { return valuation_; }
    long precision() const noexcept { return precision_; }
    const std::vector<long>& digits() const noexcept { return digits_; }

    /// Rational representative sum_{i} d_i p^{v+i} of the known digits.
    Rat representative() const;

    friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

private:
    PadicApprox(long p, long v, std::vector<long> digits, long precision);

    long prime_;
    long valuation_;            // == precision_ when zero to precision
    std::vector<long> digits_;  // base-p, least significant first, front nonzero
    long precision_;            // value known mod p^precision_
};

enum class PadicOp { add, mul, neg };

PadicApprox padic_arith(PadicOp op, const PadicApprox& a, const PadicApprox& b);
PadicApprox padic_add(const PadicApprox& a, const PadicApprox& b);
PadicApprox padic_mul(const PadicApprox& a, const PadicApprox& b);
PadicApprox padic_neg(const PadicApprox& a);

/// Componentwise image of x's truncation under Q -> Q_p for p in `primes`,
/// each at precision v_p(psi_exp(N_x)).
std::map<long, PadicApprox> crt_decompose(const RadixTable& table, const FiniteAdele& x,
                                          const std::vector<long>& primes);

/// The unique FiniteAdele on window [gamma, precision) with the given p-adic
/// images; inverse of crt_decompose on finite windows.
FiniteAdele crt_recompose(const RadixTable& table,
                          const std::map<long, PadicApprox>& components,
                          long gamma, long precision);

} // namespace adele
