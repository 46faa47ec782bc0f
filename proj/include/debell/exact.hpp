#pragma once

// Exact scalars shared by every module: arbitrary-precision integers and
// normalized rationals (both backed by GMP), plus the elementary
// combinatorial quantities built from them.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace debell {

using Integer = mpz_class;

/// Normalized fraction: denominator positive, gcd(|num|, den) = 1, zero is 0/1.
/// Every GMP arithmetic result is already canonical; values built from a raw
/// numerator/denominator pair must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q = 1. The sign always sits on p.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p", "p/q", with an optional leading sign on p. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);
bool is_nonnegative_integer(const Rational& value);

/// Throws std::domain_error if the value is not integral.
Integer to_integer(const Rational& value);

Integer factorial(unsigned n);

/// Extended binomial: 0 for k < 0; for n < 0 the product formula
/// n(n-1)...(n-k+1)/k!, so binomial(-1, 0) = 1.
Integer binomial(long n, long k);

/// n! / prod(parts_i!). Throws std::invalid_argument when the parts do not sum to n.
Integer multinomial(unsigned n, std::span<const unsigned> parts);

/// (t|alpha)_n = t (t - alpha) (t - 2 alpha) ... (t - (n-1) alpha); empty product is 1.
Rational gen_falling(const Rational& t, const Rational& alpha, unsigned n);

/// (t)_n = (t|1)_n.
inline Rational falling(const Rational& t, unsigned n) { return gen_falling(t, Rational(1), n); }

Rational power(const Rational& base, unsigned exponent);

}  // namespace debell
