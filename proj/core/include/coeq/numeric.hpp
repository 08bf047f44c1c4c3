#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace coeq {

// Exact arithmetic used wherever values genuinely grow (matrix-power traces,
// power-series coefficients, cycle means, measures).  Cylinder-function
// tables and Birkhoff sums stay in int64_t: at certification scale those are
// tiny sums of user-supplied integers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Decimal rendering; rationals as "p/q", or just "p" when q == 1.
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

// Inverse of the above.  Accepts optional leading '-', digits, and for
// rationals an optional "/denominator" part.  Throws Error{SchemaError} on
// malformed input or zero denominator.
BigInt parse_bigint(const std::string& text);
Rational parse_rational(const std::string& text);

// floor(a / b) for exact rationals, as used by truncation-period bounds.
BigInt floor_div(const Rational& value);

// 64-bit FNV-1a over raw bytes, rendered as 16 hex digits.  Used for the
// input-digest block of reports; stable across platforms and runs.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace coeq
