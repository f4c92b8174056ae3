#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cubewalk {

// Unbounded integers everywhere a value could outgrow 64 bits: Fibonacci
// numbers, Zeckendorf decoding, path counts, exact floor arithmetic.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace cubewalk
