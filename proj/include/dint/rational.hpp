#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dint {

/// Exact rational coordinate type; always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& s);

/// Lowest-terms "p" or "p/q".
std::string format_rational(const Rational& r);

}  // namespace dint
