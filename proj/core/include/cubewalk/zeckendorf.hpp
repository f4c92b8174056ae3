#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cubewalk/bigint.hpp"

namespace cubewalk {

// F_1 = F_2 = 1, F_3 = 2, ...; throws IndexOutOfRange for m < 1
BigInt fib_number(std::int64_t m);

// Canonical Zeckendorf digits, msd first, over weights F_2, F_3, ...
// No "11" substring ever appears; 0 encodes to the empty string.
std::string zeck_encode(const BigInt& n);

// Inverse of zeck_encode. Rejects non-binary characters (InvalidDigits),
// "11" (AdjacentOnes) and a nonempty string starting with '0' (LeadingZero).
BigInt zeck_decode(std::string_view digits);

}  // namespace cubewalk
