#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace normcert {

/// Exact rationals. GMP keeps mpq_class canonical after every arithmetic
/// operation: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws DomainError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

/// r^e for e >= 0.
Rational pow(const Rational& r, unsigned long e);

}  // namespace normcert
