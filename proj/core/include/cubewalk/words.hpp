#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubewalk/bigint.hpp"
#include "cubewalk/bits.hpp"
#include "cubewalk/quadratic.hpp"

namespace cubewalk {

struct FibonacciSpec {};

struct DoublingSpec {};

// Fixed point of a binary morphism, prolongable at the seed.
struct MorphicSpec {
  std::string image0;
  std::string image1;
  std::uint8_t seed = 0;
};

// Characteristic Sturmian word from the continued fraction [0; a1, a2, ...],
// given as a finite preperiod plus a repeating period (the period must be
// nonempty: finite expansions denote rational slopes and are rejected).
struct SturmianCfSpec {
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period;
};

// Characteristic Sturmian word with slope (p + q*sqrt(d)) / r in (0,1).
struct SturmianSlopeSpec {
  BigInt p;
  BigInt q;
  BigInt d;
  BigInt r;
};

using WordSpec =
    std::variant<FibonacciSpec, MorphicSpec, SturmianCfSpec, SturmianSlopeSpec, DoublingSpec>;

void validate(const MorphicSpec& spec);
void validate(const SturmianCfSpec& spec);
void validate(const SturmianSlopeSpec& spec);

Bits morphic_prefix(const MorphicSpec& spec, std::size_t n);
Bits fibonacci_prefix(std::size_t n);
Bits sturmian_prefix_cf(const SturmianCfSpec& spec, std::size_t n);
Bits sturmian_prefix_slope(const SturmianSlopeSpec& spec, std::size_t n);
Bits doubling_prefix(std::size_t n);

Bits prefix(const WordSpec& spec, std::size_t n);

// The slope as an exact quadratic value (validates the spec first).
Quadratic slope_value(const SturmianSlopeSpec& spec);

// Partial quotients a1, ..., a_terms of the slope's continued fraction
// (the leading a0 = 0 is checked and dropped).
std::vector<std::int64_t> cf_expansion(const SturmianSlopeSpec& spec, std::size_t terms);

// Text syntax used by the CLI and config files:
//   "fib" | "doubling"
//   "morphic:0->IMG0,1->IMG1;seed=S"
//   "cf:[0;a1,a2,...,(p1,...,pk)]"
//   "slope:(p+q*sqrt(d))/r"
// Whitespace is insignificant. Errors name the offending field.
WordSpec parse_word_spec(std::string_view text);
std::string to_string(const WordSpec& spec);

}  // namespace cubewalk
