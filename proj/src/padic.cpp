#include "adele/padic.hpp"

#include <algorithm>

namespace adele {

namespace {

Int pow_int(long p, long e) {
    Int out = 1;
    for (long i = 0; i < e; ++i) out *= p;
    return out;
}

// v_p of a nonzero rational.
long valuation_of(const Rat& q, long p) {
    long v = 0;
    Int n = numerator(q);
    if (n < 0) n = -n;
    while (n % p == 0) { n /= p; ++v; }
    Int d = denominator(q);
    while (d % p == 0) { d /= p; --v; }
    return v;
}

// u mod p^e for a p-adic unit (or integer) u = a/b with gcd(b, p) = 1, e >= 1.
Int unit_mod_prime_power(const Rat& u, long p, long e) {
    const Int pe = pow_int(p, e);
    Int a = numerator(u) % pe;
    if (a < 0) a += pe;
    Int b = denominator(u) % pe;
    const Int phi = pe / p * (p - 1);
    const Int inv = powm(b, phi - 1, pe);
    return a * inv % pe;
}

// v_p(psi_exp(n)) for signed n: counts occurrences of p among the radices.
long ladder_valuation(const RadixTable& table, long n, long p) {
    const long sign = n < 0 ? -1 : 1;
    long count = 0;
    for (long k = 0; k < (n < 0 ? -n : n); ++k)
        if (table.radix(k) == p) ++count;
    return sign * count;
}

} // namespace

PadicApprox::PadicApprox(long p, long v, std::vector<long> digits, long precision)
    : prime_(p), valuation_(v), digits_(std::move(digits)), precision_(precision) {}

PadicApprox PadicApprox::zero(long p, long precision) {
    return PadicApprox(p, precision, {}, precision);
}

PadicApprox PadicApprox::from_rational(long p, const Rat& q, long precision) {
    if (q == 0) return zero(p, precision);
    const long v = valuation_of(q, p);
    if (v >= precision) return zero(p, precision);
    const Rat unit = q / Rat(v >= 0 ? Rat(pow_int(p, v)) : Rat(Int(1), pow_int(p, -v)));
    Int residue = unit_mod_prime_power(unit, p, precision - v);
    std::vector<long> digits;
    digits.reserve(static_cast<size_t>(precision - v));
    for (long i = 0; i < precision - v; ++i) {
        digits.push_back(Int(residue % p).convert_to<long>());
        residue /= p;
    }
    return PadicApprox(p, v, std::move(digits), precision);
}

Rat PadicApprox::representative() const {
    Rat sum = 0;
    Rat scale = valuation_ >= 0 ? Rat(pow_int(prime_, valuation_))
                                : Rat(Int(1), pow_int(prime_, -valuation_));
    for (long d : digits_) {
        if (d != 0) sum += Rat(d) * scale;
        scale *= prime_;
    }
    return sum;
}

PadicApprox padic_add(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime() != b.prime())
        throw domain_error("p-adic prime mismatch: " + std::to_string(a.prime()) + " vs " +
                           std::to_string(b.prime()));
    const long m = std::min(a.precision(), b.precision());
    return PadicApprox::from_rational(a.prime(), a.representative() + b.representative(), m);
}

PadicApprox padic_mul(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime() != b.prime())
        throw domain_error("p-adic prime mismatch: " + std::to_string(a.prime()) + " vs " +
                           std::to_string(b.prime()));
    const long m = std::min({a.precision() + b.valuation(), b.precision() + a.valuation(),
                             a.precision() + b.precision()});
    return PadicApprox::from_rational(a.prime(), a.representative() * b.representative(), m);
}

PadicApprox padic_neg(const PadicApprox& a) {
    return PadicApprox::from_rational(a.prime(), -a.representative(), a.precision());
}

PadicApprox padic_arith(PadicOp op, const PadicApprox& a, const PadicApprox& b) {
    switch (op) {
        case PadicOp::add: return padic_add(a, b);
        case PadicOp::mul: return padic_mul(a, b);
        case PadicOp::neg: return padic_neg(a);
    }
    throw domain_error("unknown p-adic op");
}

std::map<long, PadicApprox> crt_decompose(const RadixTable& table, const FiniteAdele& x,
                                          const std::vector<long>& primes) {
    const Rat value = x.truncated_value(table);
    std::map<long, PadicApprox> out;
    for (long p : primes) {
        const long m = ladder_valuation(table, x.precision(), p);
        out.emplace(p, PadicApprox::from_rational(p, value, m));
    }
    return out;
}

FiniteAdele crt_recompose(const RadixTable& table,
                          const std::map<long, PadicApprox>& components,
                          long gamma, long precision) {
    if (gamma > precision) throw domain_error("crt_recompose: empty window");
    // Factor psi(N)/psi(gamma) as prime -> exponent via the radix sequence.
    std::map<long, long> exponents;
    for (long k = gamma; k < precision; ++k) ++exponents[table.radix(k)];

    Int t = 0, modulus = 1;
    for (const auto& [p, e] : exponents) {
        const auto it = components.find(p);
        if (it == components.end())
            throw domain_error("crt_recompose: missing component for prime " + std::to_string(p));
        const PadicApprox& comp = it->second;
        const long target_prec = ladder_valuation(table, precision, p);
        if (comp.precision() < target_prec)
            throw precision_error("crt_recompose: component for prime " + std::to_string(p) +
                                  " known only mod p^" + std::to_string(comp.precision()) +
                                  ", need p^" + std::to_string(target_prec));
        // Residue of x_p / psi(gamma) mod p^e.
        const Rat scaled = comp.representative() / table.psi_exp(gamma);
        Int residue;
        if (scaled == 0) {
            residue = 0;
        } else {
            if (valuation_of(scaled, p) < 0)
                throw domain_error("crt_recompose: component for prime " + std::to_string(p) +
                                   " lies below the window");
            residue = unit_mod_prime_power(scaled, p, e);
        }
        // Merge t (mod modulus) with residue (mod p^e).
        const Int pe = pow_int(p, e);
        const Int phi = pe / p * (p - 1);
        const Int inv = powm(modulus % pe, phi - 1, pe);
        Int delta = (residue - t) % pe;
        if (delta < 0) delta += pe;
        t += modulus * (delta * inv % pe);
        modulus *= pe;
    }

    // Mixed-radix digits of t over the window.
    std::vector<long> digits;
    digits.reserve(static_cast<size_t>(precision - gamma));
    for (long k = gamma; k < precision; ++k) {
        const long r = table.radix(k);
        digits.push_back(Int(t % r).convert_to<long>());
        t /= r;
    }
    size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) ++lead;
    if (lead == digits.size()) return FiniteAdele::zero(precision);
    digits.erase(digits.begin(), digits.begin() + static_cast<long>(lead));
    return FiniteAdele::from_digits(gamma + static_cast<long>(lead), std::move(digits), precision);
}

} // namespace adele
