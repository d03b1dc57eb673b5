#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nd {

/// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses `<int>` or `<int>/<int>`; throws nd::Error(parse) on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

} // namespace nd
