#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace strata {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Accepts "7", "-3/4", "2.5", ".25" with an optional leading sign.
// Conversion is exact; anything else (exponents, hex, stray text) is rejected.
std::optional<rational> parse_rational(const std::string& s);

// Canonical form: "n" when the denominator is 1, otherwise "n/d" in lowest terms.
std::string to_string(const rational& x);

}  // namespace strata
