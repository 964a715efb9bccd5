#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace echoes {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q", or "p" when q = 1.
std::string to_string(const Rational &q);

} // namespace echoes
