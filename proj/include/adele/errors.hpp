#pragma once

#include <stdexcept>
#include <string>

namespace adele {

// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when growing the radix table past the configured index ceiling.
class table_limit_error : public error {
public:
    table_limit_error(long requested, long ceiling)
        : error("radix table ceiling exceeded: index " + std::to_string(requested) +
                " beyond limit " + std::to_string(ceiling)),
          requested_(requested), ceiling_(ceiling) {}

    long requested() const noexcept { return requested_; }
    long ceiling() const noexcept { return ceiling_; }

private:
    long requested_;
    long ceiling_;
};

// An operation needed digits the operand does not carry.
class precision_error : public error {
public:
    using error::error;
};

// A precondition on the mathematical domain failed (zero input, Re(s) out of
// range, prime mismatch, ...).
class domain_error : public error {
public:
    using error::error;
};

// A series evaluation could not certify its tail within the term budget.
class convergence_error : public error {
public:
    using error::error;
};

// Malformed textual input (rational literals, digit strings, JSON).
class parse_error : public error {
public:
    using error::error;
};

} // namespace adele
