#include "cubewalk/zeckendorf.hpp"

#include <vector>

#include "cubewalk/error.hpp"

namespace cubewalk {

namespace {

// Fibonacci numbers F_2, F_3, ... up to the first one exceeding n.
std::vector<BigInt> fib_ladder(const BigInt& n) {
  std::vector<BigInt> fibs{1, 2};  // F_2, F_3
  while (fibs.back() <= n) fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);
  return fibs;
}

}  // namespace

BigInt fib_number(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "Fibonacci index must be >= 1");
  BigInt a = 1, b = 1;  // F_1, F_2
  for (std::int64_t i = 2; i < m; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return m == 1 ? a : b;
}

std::string zeck_encode(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "cannot encode a negative integer");
  if (n == 0) return "";
  const std::vector<BigInt> fibs = fib_ladder(n);
  // greedy from the most significant weight that fits
  std::size_t top = fibs.size() - 1;
  while (fibs[top] > n) --top;
  std::string digits;
  digits.reserve(top + 1);
  BigInt rest = n;
  for (std::size_t i = top + 1; i-- > 0;) {
    if (fibs[i] <= rest) {
      digits.push_back('1');
      rest -= fibs[i];
    } else {
      digits.push_back('0');
    }
  }
  return digits;
}

BigInt zeck_decode(std::string_view digits) {
  for (char c : digits)
    if (c != '0' && c != '1')
      throw Error(ErrorKind::InvalidDigits, "digit string must be over {0,1}");
  if (!digits.empty() && digits.front() == '0')
    throw Error(ErrorKind::LeadingZero, "nonempty representation starts with 0");
  if (digits.find("11") != std::string_view::npos)
    throw Error(ErrorKind::AdjacentOnes, "\"11\" violates the Zeckendorf condition");
  BigInt a = 1, b = 2;  // F_2, F_3 walking up from the least significant end
  BigInt value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == '1') value += a;
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return value;
}

}  // namespace cubewalk
