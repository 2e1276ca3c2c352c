#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degen {

// Exact arbitrary-precision integers and rationals, GMP-backed.
// Rationals are kept canonical at all times: lowest terms, positive
// denominator, zero stored as 0/1.
using Int = mpz_class;
using Rational = mpq_class;

/// n! as an exact integer.
Int factorial(unsigned long n);

/// Binomial coefficient over nonnegative integers; zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// Ordinary falling factorial x(x-1)...(x-m+1) of an integer x; 1 for m = 0.
Int falling_factorial_int(long x, unsigned long m);

/// base^exp over nonnegative integers.
Int int_pow(unsigned long base, unsigned long exp);

/// num/den in canonical form. Throws std::invalid_argument when den == 0.
Rational make_rational(Int num, Int den);

/// Parses "p/q" (optional sign on p, unsigned positive q) or a bare "p".
/// Surrounding whitespace is tolerated. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" with "/q" omitted when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace degen
