#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace qcube {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

// Lowest terms, denominator omitted when 1: "0", "1/4", "-2/3".
std::string to_string(const Rat& r);

// Accepts "n" or "n/d" with optional leading '-'; throws std::invalid_argument
// on malformed input or zero denominator.
Rat rat_from_string(std::string_view s);

}  // namespace qcube
