#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qtrsk {

// Always canonical: gcd(num, den) = 1, den > 0.
using BigRational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "p/q", "-p/q". Throws Error(ParseError).
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& r);

// r^e for integer e; throws DivideByZero for 0^negative.
BigRational pow(const BigRational& r, long e);

}  // namespace qtrsk
