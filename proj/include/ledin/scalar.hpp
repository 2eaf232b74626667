#pragma once

// Exact scalars. Every value in the library is an arbitrary-precision
// rational kept in lowest terms; GMP canonicalizes the result of every
// arithmetic operation, so structural equality is value equality.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ledin {

using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses an optionally signed integer or "integer/positive-integer".
/// Throws InvalidInput on anything else (including a zero denominator).
Scalar parse_scalar(std::string_view text);

/// "num" when the denominator is 1, otherwise "num/den".
std::string to_string(const Scalar& value);
std::string to_string(const Integer& value);

/// base^exponent by repeated squaring. Negative exponents invert the base
/// (throws std::domain_error for 0^-k). 0^0 = 1.
Scalar pow(const Scalar& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

/// (-1)^exponent.
inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

/// Exact binomial coefficient C(n, k) via the multiplicative formula;
/// zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace ledin
