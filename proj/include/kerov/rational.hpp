#pragma once

#include <gmpxx.h>

#include <string>

namespace kerov {

// Exact arithmetic everywhere: arbitrary-precision rationals, always stored
// reduced with positive denominator (mpq_class keeps them canonical).
using Rational = mpq_class;
using BigInt = mpz_class;

Rational rat(long num, long den = 1);
Rational rational_from_string(const std::string& s);

bool is_integer(const Rational& q);

// "35" or "35/4"; minus sign on the numerator.
std::string to_string(const Rational& q);

BigInt factorial(int n);
BigInt binomial(int n, int k);
Rational pow_rational(const Rational& base, int exponent);  // exponent >= 0
BigInt pow_int(long base, int exponent);                    // exponent >= 0

}  // namespace kerov
