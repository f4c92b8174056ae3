#include "cubewalk/bits.hpp"

#include "cubewalk/error.hpp"

namespace cubewalk {

std::string bits_to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorKind::InvalidSymbol, "binary sequence contains a non-binary character");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

}  // namespace cubewalk
