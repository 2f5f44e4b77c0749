#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace spinharm {

// Exact arbitrary-precision integer and rational scalars. Every symbolic
// coefficient in the library is built from these; no floating point enters
// until explicit evaluation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Lowest-terms "p/q" (or "p" when q = 1), never decimal.
std::string to_string(const Rational& r);

/// Parses "p", "p/q", with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace spinharm
