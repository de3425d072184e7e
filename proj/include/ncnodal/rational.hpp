#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncnodal {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Renders "n" or "n/d" with d > 0.
std::string rat_to_string(const Rat& r);

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
Rat rat_from_string(const std::string& text);

}  // namespace ncnodal
