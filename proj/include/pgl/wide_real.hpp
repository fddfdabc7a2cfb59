#pragma once

#include <boost/multiprecision/float128.hpp>

namespace pgl {

/// Working precision for the alternating incomplete-gamma series. Their terms
/// reach ~x * e^{log x} / sqrt(log x) before cancelling down to O(x), which
/// exhausts double precision well before x = 1e6.
using wide_real = boost::multiprecision::float128;

}  // namespace pgl
