#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "adele/numeric.hpp"

namespace adele {

/// Cache of the reparametrized Chebyshev ladder e^{psi(n)} and its prime
/// radices e^{Lambda(n+1)}.
///
/// Indexing convention: consecutive ladder ratios are single primes, so
///   psi_exp(0) = 1,  psi_exp(n+1) = psi_exp(n) * radix(n),
///   psi_exp(-n) = 1 / psi_exp(n).
/// The original lcm indices are reachable through rho().
///
/// The cache is append-only: growth is serialized behind a mutex, already
/// grown entries are immutable and safe to read concurrently.
class RadixTable {
public:
    static constexpr long kDefaultCeiling = 10000;

    explicit RadixTable(long index_ceiling = kDefaultCeiling);

    /// e^{psi(n)} for any signed index, growing the table on demand.
    Rat psi_exp(long n) const;

    /// e^{psi(n)} for n >= 0 as an exact integer (the lcm ladder value).
    Int ladder(long n) const;

    /// The prime e^{Lambda(k+1)} = psi_exp(k+1)/psi_exp(k).
    long radix(long k) const;

    /// Original (unreparametrized) index with rho(0) = 0, increasing.
    long rho(long n) const;

    /// The unique gamma with q in psi_exp(gamma)*Z but not psi_exp(gamma+1)*Z.
    /// Equals the index of the first nonzero digit of q's adic expansion.
    long order_of_rational(const Rat& q) const;

    long ceiling() const noexcept { return ceiling_; }

private:
    void grow_to(long n) const;        // callers must NOT hold lock_
    void grow_sieve_locked(long bound) const;

    long ceiling_;

    mutable std::shared_mutex lock_;
    mutable std::vector<long> jump_points_;  // m with lcm(1..m) > lcm(1..m-1), i.e. m = p^l
    mutable std::vector<long> radices_;      // radices_[n] = prime radix at index n >= 0
    mutable std::vector<Int> ladder_;        // ladder_[n] = e^{psi(n)}, n >= 0
    mutable std::vector<bool> composite_;    // sieve over [0, prime_sieve_bound_]
    mutable long prime_sieve_bound_ = 0;
};

} // namespace adele
