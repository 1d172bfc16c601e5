#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossunion {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

/// Accepts "p", "-p", "p/q" with q > 0. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

/// Nearest double, for display only.
double to_double(const BigRational& value);

}  // namespace crossunion
