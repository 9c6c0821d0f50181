#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace secint {

using Integer = mpz_class;
using Rational = mpq_class;

// Narrowing conversions used where a value drives a loop bound or an exponent.
// Both throw secint::InvalidArgument when the value does not fit.
long to_long(const Integer& value, const char* what);
unsigned long to_ulong(const Integer& value, const char* what);

inline std::string to_string(const Integer& value) { return value.get_str(); }
std::string to_string(const Rational& value);

// Parses "p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace secint
