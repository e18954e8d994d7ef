#include "adele/numeric.hpp"

#include <cctype>

#include "adele/errors.hpp"

namespace adele {

namespace {

Int parse_integer(const std::string& text) {
    size_t i = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
    if (i == text.size()) throw parse_error("expected an integer: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected an integer: '" + text + "'");
    return Int(text);
}

} // namespace

Rat parse_rational(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(text));
    const Int num = parse_integer(text.substr(0, slash));
    const Int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator: '" + text + "'");
    return Rat(num, den);
}

std::string to_string(const Rat& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) out += "/" + denominator(q).str();
    return out;
}

} // namespace adele
