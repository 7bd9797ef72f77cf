#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncdkit {

using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

inline double to_double(const Ratio& r) { return r.convert_to<double>(); }

}  // namespace ncdkit
