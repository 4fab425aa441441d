#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lr {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws lr::Error
/// (Domain) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q > 0 in lowest terms, including "n/1" for integers.
std::string format_rational(const Rational& value);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double value);

/// value^exponent for any integer exponent. Throws Domain on 0^negative.
Rational pow_int(const Rational& value, long exponent);

/// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

int sign(const Rational& value);

}  // namespace lr
