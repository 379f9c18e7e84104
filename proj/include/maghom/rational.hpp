#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace maghom {

// Exact arithmetic throughout: lengths and distances are rationals, chain
// coefficients and SNF entries are arbitrary-precision integers.
using rational = mpq_class;
using bigint = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an input file (rather than the mathematics) is at fault.
struct input_error : error {
    using error::error;
};

// Parses "p/q" or a plain integer string. Rejects empty strings, malformed
// digits and zero denominators.
std::optional<rational> parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const rational& q);

}  // namespace maghom
