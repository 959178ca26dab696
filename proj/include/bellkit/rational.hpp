#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bellkit {

// All probabilities, correlations and report statistics are arbitrary-precision
// rationals kept in canonical reduced form. Floats appear only at the Monte
// Carlo sampling boundary and in serialized "float rendering" fields.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "num/den" or "num" (decimal digits, optional leading minus).
// Throws Errc::parse_error on malformed input or a zero denominator.
Rat parse_rational(const std::string& text);

// As parse_rational, but rejects negative values (probability masses).
Rat parse_probability(const std::string& text);

// Always renders as "num/den", e.g. "1/2", "0/1", "-3/4".
std::string format_rational(const Rat& r);

double to_double(const Rat& r);

// Exact conversion of a finite double to a rational (no decimal rounding).
Rat rational_from_double(double value);

}  // namespace bellkit
