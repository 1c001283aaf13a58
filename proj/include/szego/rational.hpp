#ifndef SZEGO_RATIONAL_HPP
#define SZEGO_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace szego {

// Exact rational scalar. All arithmetic in this library is exact; floating
// point appears only in the numeric cross-check paths.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonicalizing factory: lowest terms, denominator > 0.
Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// Canonical string "p" or "p/q" (denominator always positive).
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Integer factorial(unsigned n);

// C(n, k) for integer n >= 0.
Integer binomial(unsigned long n, unsigned long k);

// Generalized binomial C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!.
// alpha may be any rational (used with negative integers for expansions
// at infinity).
Rational binomial_general(const Rational& alpha, unsigned k);

// base^e, exact; e may be negative (base must be nonzero then).
Rational pow_rational(const Rational& base, long e);

} // namespace szego

#endif
