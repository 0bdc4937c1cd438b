#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace radial {

/// Exact cost arithmetic. Branch comparisons in the placement DP and the
/// feasibility checks of the oracles never go through floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "2", "0.3", "-1.25e-2", "7/3". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Converts a double through its shortest round-trip decimal form, so a JSON
/// literal such as 0.3 becomes exactly 3/10.
Rational rational_from_double(double value);

/// Terminating decimals print as decimals ("0.3", "2"), anything else as "p/q".
std::string format_rational(const Rational& value);

/// True when the value has a finite decimal expansion.
bool is_terminating_decimal(const Rational& value);

double to_double(const Rational& value);

}  // namespace radial
