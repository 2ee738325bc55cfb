#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace origami {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal "num/den" form; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace origami
