#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kflag {

/// Arbitrary-precision integer. All character coefficients use this type;
/// no computation in the library rounds or overflows.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, used for inverse Cartan matrices and for
/// coefficients of truncated exponential expansions.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace kflag
