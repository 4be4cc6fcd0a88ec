#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fhtw {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Serializes as "p/q"; integers keep an explicit "/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

} // namespace fhtw
