#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubewalk {

// A finite binary sequence (word prefix, cube-mark sequence, ...), one symbol per byte.
using Bits = std::vector<std::uint8_t>;

std::string bits_to_string(const Bits& bits);
Bits bits_from_string(std::string_view text);  // throws InvalidSymbol on non-binary chars

}  // namespace cubewalk
