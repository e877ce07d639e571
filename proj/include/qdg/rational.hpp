#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qdg {

/// Exact rational number; GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "n" or "n/d" (optional sign, decimal digits). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& x);

/// x^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational pow(const Rational& x, long e);

}  // namespace qdg
