#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace partalg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reads "p", "-p" or "p/q" (no decimals). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt factorial(unsigned long n);

/// Falling factorial m (m-1) ... (m-len+1) for any integer m.
BigInt falling_factorial(long m, unsigned long len);

}  // namespace partalg
