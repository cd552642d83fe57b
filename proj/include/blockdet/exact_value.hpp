#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockdet {

// Arbitrary-precision signed integer used for every det/per result.
using ExactValue = boost::multiprecision::cpp_int;

inline std::string to_decimal(const ExactValue& v) { return v.str(); }

inline ExactValue from_decimal(const std::string& s) { return ExactValue(s); }

}  // namespace blockdet
