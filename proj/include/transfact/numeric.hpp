#pragma once

#include <gmpxx.h>

#include <string>

namespace transfact {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt power(const BigInt& base, unsigned exponent);

/// Exact rational power; negative exponents allowed for nonzero base.
Rational power(const Rational& base, int exponent);

std::string to_decimal(const BigInt& value);
BigInt from_decimal(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace transfact
