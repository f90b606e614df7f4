#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace framed {

// Exact rational coefficients; arbitrary-precision, always in lowest terms
// with positive denominator (cpp_rational maintains both).
using Scalar = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// "n" or "p/q" (q > 0, lowest terms).
std::string scalar_to_string(const Scalar& s);

// Accepts optional sign, integer or integer/integer; surrounding whitespace
// ignored. Throws std::invalid_argument on anything else (incl. zero
// denominator).
Scalar scalar_from_string(const std::string& text);

} // namespace framed
