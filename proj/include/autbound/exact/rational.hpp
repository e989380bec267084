#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace autbound {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses `a` or `a/b` (optional leading sign). Throws MalformedInput.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned exponent);

/// Largest r >= 0 with r^k <= n, for n >= 0 and k >= 1.
Integer integer_root(const Integer& n, unsigned k);

/// Converts to uint64, throwing InvalidInput when the value does not fit.
std::uint64_t to_u64(const Integer& value);

}  // namespace autbound
