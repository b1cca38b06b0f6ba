#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gonil {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation; values built from strings go through
// parse_rational, which canonicalizes.
using Rational = mpq_class;

using VectorQ = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q > 0).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

std::string to_string(const VectorQ& v);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

bool is_zero(const VectorQ& v);

Rational dot(const VectorQ& a, const VectorQ& b);

VectorQ unit_vector(std::size_t dim, std::size_t index);

}  // namespace gonil
