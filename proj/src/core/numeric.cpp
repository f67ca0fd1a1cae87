#include "transfact/numeric.hpp"

#include "transfact/error.hpp"

namespace transfact {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorCode::invalid_argument, "zero to a negative power");
    Rational inv = 1 / base;
    return power(inv, -exponent);
  }
  Rational out(power(BigInt(base.get_num()), static_cast<unsigned>(exponent)),
               power(BigInt(base.get_den()), static_cast<unsigned>(exponent)));
  out.canonicalize();
  return out;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    fail(ErrorCode::parse, "not a decimal integer: '" + text + "'");
  }
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace transfact
