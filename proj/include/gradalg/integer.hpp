#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gradalg {

// Coefficients never wrap: every polynomial and series coefficient is an
// arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

} // namespace gradalg
