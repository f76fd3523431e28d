#pragma once

#include <gmpxx.h>

#include <string>

namespace qyd {

// Exact scalars. Rational values are kept canonical by GMP: lowest terms,
// positive denominator. No floating point anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a", or "a/b" (b > 0 after canonicalization). Throws
// std::invalid_argument on malformed input or zero denominator.
Rational rat_parse(const std::string& s);

// "6", "-3/2" — denominator printed only when it is not 1.
std::string rat_str(const Rational& r);
std::string int_str(const Integer& z);

Integer factorial(int n);
Integer binomial(int n, int k);

// Bits in |z|; 0 for z == 0. Used for pivot selection in the exact echelon.
long bit_length(const Integer& z);

}  // namespace qyd
