#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace tverberg {

/// Exact rational number, always kept in canonical (reduced, positive
/// denominator) form.
using Scalar = boost::multiprecision::mpq_rational;

/**
 * Parses an exact rational from text. Accepted forms:
 *   "12", "-7"            integers
 *   "3/4", "-10/6"        fractions (reduced on input)
 *   "0.125", "-2.5"       decimals, converted exactly
 * Throws ParseError on anything else or on a zero denominator.
 */
Scalar parse_scalar(std::string_view text);

/// Formats as "num/den", also for integers ("3/1").
std::string format_scalar(const Scalar& value);

double to_double(const Scalar& value);

}  // namespace tverberg
