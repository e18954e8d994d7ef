#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "adele/errors.hpp"

namespace adele {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// Generator of the subgroup q1*Z + q2*Z of (Q, +): gcd(a*d, c*b) / (b*d)
// for q1 = a/b, q2 = c/d in lowest terms.
inline Rat rational_gcd(const Rat& q1, const Rat& q2) {
    if (q1 == 0) return q2 < 0 ? Rat(-q2) : q2;
    if (q2 == 0) return q1 < 0 ? Rat(-q1) : q1;
    const Int a = numerator(q1), b = denominator(q1);
    const Int c = numerator(q2), d = denominator(q2);
    return Rat(gcd(Int(a * d), Int(c * b)), b * d);
}

// Reduces q into [0, 1) modulo 1.
inline Rat mod_one(const Rat& q) {
    const Int n = numerator(q), d = denominator(q);
    Int r = n % d;
    if (r < 0) r += d;
    return Rat(r, d);
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

// Natural log of a positive rational, usable far beyond double range.
inline double log_rational(const Rat& q) {
    if (q <= 0) throw domain_error("log of non-positive rational");
    const auto bits = [](const Int& v) { return static_cast<long>(msb(v)); };
    const Int n = numerator(q), d = denominator(q);
    const long shift_n = n > 1 ? std::max(0L, bits(n) - 52) : 0;
    const long shift_d = d > 1 ? std::max(0L, bits(d) - 52) : 0;
    const double ln = std::log((shift_n > 0 ? Int(n >> shift_n) : n).convert_to<double>());
    const double ld = std::log((shift_d > 0 ? Int(d >> shift_d) : d).convert_to<double>());
    constexpr double ln2 = 0.6931471805599453;
    return (ln + static_cast<double>(shift_n) * ln2) - (ld + static_cast<double>(shift_d) * ln2);
}

Rat parse_rational(const std::string& text);
std::string to_string(const Rat& q);

} // namespace adele
