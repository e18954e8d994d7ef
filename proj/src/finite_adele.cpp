#include "adele/finite_adele.hpp"

#include <algorithm>
#include <sstream>

namespace adele {

namespace {

// u * v^{-1} mod p for a rational u/v with gcd(v, p) = 1.
long rational_mod_prime(const Rat& q, long p) {
    const Int pp(p);
    Int n = numerator(q) % pp;
    if (n < 0) n += pp;
    Int d = denominator(q) % pp;
    // Fermat inverse; p is prime and d != 0 mod p.
    Int inv = powm(d, pp - 2, pp);
    return Int(n * inv % pp).convert_to<long>();
}

} // namespace

FiniteAdele::FiniteAdele(long order, std::vector<long> digits, long precision)
    : order_(order), digits_(std::move(digits)), precision_(precision) {}

FiniteAdele FiniteAdele::zero(long precision) {
    return FiniteAdele(precision, {}, precision);
}

FiniteAdele FiniteAdele::from_digits(long order, std::vector<long> digits, long precision) {
    if (digits.empty()) return zero(precision);
    if (digits.front() == 0 || order + static_cast<long>(digits.size()) != precision)
        throw domain_error("from_digits: digits not normalized");
    return FiniteAdele(order, std::move(digits), precision);
}

FiniteAdele FiniteAdele::from_rational(const RadixTable& table, const Rat& q, long precision) {
    if (q == 0) return zero(precision);
    const long gamma = table.order_of_rational(q);
    if (gamma >= precision) return zero(precision);
    std::vector<long> digits;
    digits.reserve(static_cast<size_t>(precision - gamma));
    Rat rest = q;
    for (long k = gamma; k < precision; ++k) {
        const long r = table.radix(k);
        const long a = rational_mod_prime(rest / table.psi_exp(k), r);
        digits.push_back(a);
        if (a != 0) rest -= Rat(a) * table.psi_exp(k);
    }
    return FiniteAdele(gamma, std::move(digits), precision);
}

long FiniteAdele::digit(long k) const {
    if (k < order_) return 0;
    const long i = k - order_;
    return i < static_cast<long>(digits_.size()) ? digits_[static_cast<size_t>(i)] : 0;
}

Rat FiniteAdele::truncated_value(const RadixTable& table) const {
    Rat sum = 0;
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] != 0) sum += Rat(digits_[i]) * table.psi_exp(order_ + static_cast<long>(i));
    }
    return sum;
}

std::string FiniteAdele::to_digit_string() const {
    std::ostringstream out;
    if (is_zero_to_precision()) {
        out << "zero|" << precision_;
        return out.str();
    }
    out << order_ << ':';
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (i) out << ',';
        out << digits_[i];
    }
    out << '|' << precision_;
    return out.str();
}

FiniteAdele FiniteAdele::parse(const std::string& text) {
    const auto bar = text.rfind('|');
    if (bar == std::string::npos) throw parse_error("digit string missing '|N': " + text);
    long precision = 0;
    try {
        size_t used = 0;
        precision = std::stol(text.substr(bar + 1), &used);
        if (bar + 1 + used != text.size()) throw parse_error("trailing junk in: " + text);
    } catch (const std::exception&) {
        throw parse_error("bad precision in digit string: " + text);
    }
    const std::string head = text.substr(0, bar);
    if (head == "zero") return zero(precision);
    const auto colon = head.find(':');
    if (colon == std::string::npos) throw parse_error("digit string missing order: " + text);
    long order = 0;
    try {
        order = std::stol(head.substr(0, colon));
    } catch (const std::exception&) {
        throw parse_error("bad order in digit string: " + text);
    }
    std::vector<long> digits;
    std::istringstream body(head.substr(colon + 1));
    std::string tok;
    while (std::getline(body, tok, ',')) {
        try {
            digits.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw parse_error("bad digit '" + tok + "' in: " + text);
        }
    }
    if (digits.empty()) throw parse_error("digit string has no digits: " + text);
    if (digits.front() == 0) throw parse_error("leading digit must be nonzero: " + text);
    if (order + static_cast<long>(digits.size()) != precision)
        throw parse_error("digit count disagrees with order/precision: " + text);
    return FiniteAdele(order, std::move(digits), precision);
}

FiniteAdele add(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y) {
    const long precision = std::min(x.precision(), y.precision());
    const long start = std::min(std::min(x.order(), y.order()), precision);
    std::vector<long> digits;
    digits.reserve(static_cast<size_t>(precision - start));
    long carry = 0;
    for (long k = start; k < precision; ++k) {
        const long r = table.radix(k);
        long s = x.digit(k) + y.digit(k) + carry;
        carry = s >= r ? 1 : 0;
        digits.push_back(s - (carry ? r : 0));
    }
    // Normalize: strip leading zeros.
    size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) ++lead;
    if (lead == digits.size()) return FiniteAdele::zero(precision);
    digits.erase(digits.begin(), digits.begin() + static_cast<long>(lead));
    return FiniteAdele::from_digits(start + static_cast<long>(lead), std::move(digits), precision);
}

FiniteAdele negate(const RadixTable& table, const FiniteAdele& x) {
    if (x.is_zero_to_precision()) return x;
    std::vector<long> digits(x.digits().size());
    const long gamma = x.order();
    digits[0] = table.radix(gamma) - x.digits()[0];
    for (size_t i = 1; i < digits.size(); ++i)
        digits[i] = table.radix(gamma + static_cast<long>(i)) - 1 - x.digits()[i];
    return FiniteAdele::from_digits(gamma, std::move(digits), x.precision());
}

FiniteAdele sub(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y) {
    return add(table, x, negate(table, y));
}

FiniteAdele mul(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y) {
    const Rat mx = table.psi_exp(x.precision());
    const Rat my = table.psi_exp(y.precision());
    const Rat g = rational_gcd(rational_gcd(table.psi_exp(x.order()) * my,
                                            table.psi_exp(y.order()) * mx),
                               mx * my);
    const long derived = table.order_of_rational(g);
    const Rat product = x.truncated_value(table) * y.truncated_value(table);
    return FiniteAdele::from_rational(table, product, derived);
}

OrdResult ord(const FiniteAdele& x) {
    if (x.is_zero_to_precision()) return OrdResult::AtLeast(x.precision());
    return OrdResult::Known(x.order());
}

Rat norm(const RadixTable& table, const FiniteAdele& x) {
    const OrdResult o = ord(x);
    if (!o.known) throw indeterminate_norm_error(table.psi_exp(-o.value));
    return table.psi_exp(-o.value);
}

Rat distance(const RadixTable& table, const FiniteAdele& x, const FiniteAdele& y) {
    return norm(table, add(table, x, negate(table, y)));
}

Rat fractional_part(const RadixTable& table, const FiniteAdele& x) {
    if (x.precision() < 0)
        throw precision_error("fractional_part needs all negative-index digits (precision >= 0)");
    Rat sum = 0;
    for (long k = x.order(); k < 0; ++k) {
        const long a = x.digit(k);
        if (a != 0) sum += Rat(a) * table.psi_exp(k);
    }
    return sum;
}

} // namespace adele
