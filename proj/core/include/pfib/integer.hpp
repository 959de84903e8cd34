#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pfib {

/// Arbitrary-precision signed integer used for every count and coefficient.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace pfib
