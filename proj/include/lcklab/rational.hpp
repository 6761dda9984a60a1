#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace lcklab {

/// Arbitrary-precision rational. GMP keeps every result canonical
/// (positive denominator, reduced) after arithmetic.
using Rational = mpq_class;

/// "p" or "p/q"; never a decimal approximation.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading '-', q > 0. The result is
/// canonicalized. Returns nullopt for anything else (including "1/0").
std::optional<Rational> parse_rational(std::string_view text);

int sign(const Rational& q);

}  // namespace lcklab
