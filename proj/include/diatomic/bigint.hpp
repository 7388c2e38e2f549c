#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace diatomic {

// All sequence and continuant values are exact signed integers of arbitrary
// size; nothing in this library ever rounds.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace diatomic
