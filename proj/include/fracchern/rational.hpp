#pragma once

#include <gmpxx.h>

#include <string>

namespace fracchern {

using Rational = mpq_class;
using Integer = mpz_class;

Integer binomial(long n, long k);

// p/q in canonical form; q != 0.
Rational ratio(long p, long q);

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);

}  // namespace fracchern
