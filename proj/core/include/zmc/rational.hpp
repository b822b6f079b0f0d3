#pragma once

// Exact rational scalars used throughout the symbolic kernel.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace zmc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a plain decimal such as "-0.25" into a canonical
/// rational. Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// q^k for integer k (k < 0 requires q != 0).
Rational pow(const Rational& q, long k);

}  // namespace zmc
