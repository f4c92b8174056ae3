#pragma once

#include <stdexcept>
#include <string>

namespace cubewalk {

enum class ErrorKind {
  NonProlongable,   // morphism image of seed does not start with seed / too short
  EmptyImage,       // erasing morphism
  InvalidCF,        // bad partial quotients or rational (finite) expansion
  NotIrrational,    // slope is rational (perfect-square d or q = 0)
  SlopeOutOfRange,  // slope not strictly inside (0,1)
  IndexOutOfRange,
  InvalidDigits,    // non-binary character in a digit string
  AdjacentOnes,     // "11" in a Zeckendorf string
  LeadingZero,      // nonempty Zeckendorf string starting with 0
  InvalidSymbol,    // input symbol outside {0,1}
  InvalidLanguage,  // automaton accepts a non-Zeckendorf string in range
  InvalidSpec,      // unparseable WordSpec / pattern text
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubewalk
