#include "adele/radix_table.hpp"

#include <map>
#include <mutex>

namespace adele {

namespace {

// Smallest prime factor via the sieve's composite marks, or 0 if m is not a
// prime power. m >= 2.
long prime_power_base(long m, const std::vector<bool>& composite) {
    long p = 0;
    if (!composite[static_cast<size_t>(m)]) {
        p = m;
    } else {
        for (long d = 2; d * d <= m; ++d) {
            if (m % d == 0) { p = d; break; }
        }
        long r = m;
        while (r % p == 0) r /= p;
        if (r != 1) return 0;
    }
    return p;
}

} // namespace

RadixTable::RadixTable(long index_ceiling) : ceiling_(index_ceiling) {
    ladder_.push_back(Int(1));
}

void RadixTable::grow_sieve_locked(long bound) const {
    if (bound <= prime_sieve_bound_) return;
    long b = prime_sieve_bound_ < 16 ? 16 : prime_sieve_bound_;
    while (b < bound) b *= 2;
    composite_.assign(static_cast<size_t>(b) + 1, false);
    composite_[0] = composite_[1] = true;
    for (long i = 2; i * i <= b; ++i) {
        if (composite_[static_cast<size_t>(i)]) continue;
        for (long j = i * i; j <= b; j += i) composite_[static_cast<size_t>(j)] = true;
    }
    prime_sieve_bound_ = b;
}

void RadixTable::grow_to(long n) const {
    if (n < 0) n = -n;
    {
        std::shared_lock rd(lock_);
        if (static_cast<size_t>(n) < ladder_.size()) return;
    }
    if (n > ceiling_) throw table_limit_error(n, ceiling_);
    std::unique_lock wr(lock_);
    long m = jump_points_.empty() ? 1 : jump_points_.back();
    while (static_cast<size_t>(n) >= ladder_.size()) {
        ++m;
        if (m >= prime_sieve_bound_) grow_sieve_locked(2 * m);
        const long p = prime_power_base(m, composite_);
        if (p == 0) continue;
        jump_points_.push_back(m);
        radices_.push_back(p);
        ladder_.push_back(Int(ladder_.back() * p));
    }
}

Int RadixTable::ladder(long n) const {
    grow_to(n);
    std::shared_lock rd(lock_);
    return ladder_[static_cast<size_t>(n)];
}

Rat RadixTable::psi_exp(long n) const {
    if (n >= 0) return Rat(ladder(n));
    return Rat(Int(1), ladder(-n));
}

long RadixTable::radix(long k) const {
    if (k < 0) k = -k - 1;  // radix(-n-1) = radix(n)
    grow_to(k + 1);
    std::shared_lock rd(lock_);
    return radices_[static_cast<size_t>(k)];
}

long RadixTable::rho(long n) const {
    if (n == 0) return 0;
    if (n > 0) {
        grow_to(n);
        std::shared_lock rd(lock_);
        return jump_points_[static_cast<size_t>(n - 1)] - 1;
    }
    grow_to(-n);
    std::shared_lock rd(lock_);
    return -jump_points_[static_cast<size_t>(-n - 1)];
}

long RadixTable::order_of_rational(const Rat& q) const {
    if (q == 0) throw domain_error("order_of_rational: zero has no finite order");
    Int num = numerator(q), den = denominator(q);
    if (num < 0) num = -num;

    if (den == 1) {
        // Largest l >= 0 with ladder(l) | num: strip one prime radix at a time.
        long l = 0;
        while (true) {
            const long r = radix(l);
            if (num % r != 0) return l;
            num /= r;
            ++l;
        }
    }
    // q at negative order: smallest k >= 1 with den | ladder(k), returned as -k.
    std::map<long, long> needed;  // prime -> multiplicity still missing from den
    {
        Int d = den;
        for (long p = 2; Int(p) * p <= d; ++p) {
            while (d % p == 0) { ++needed[p]; d /= p; }
        }
        if (d > 1) ++needed[d.convert_to<long>()];
    }
    long k = 0;
    while (!needed.empty()) {
        const long r = radix(k);
        ++k;
        auto it = needed.find(r);
        if (it != needed.end() && --it->second == 0) needed.erase(it);
    }
    return -k;
}

} // namespace adele
