#pragma once

#include <vector>

#include "cubewalk/bigint.hpp"

namespace cubewalk {

bool is_perfect_square(const BigInt& n);

// sign of a + b*sqrt(d), d >= 0, by sign-aware squaring (no floating point)
int sign_of_linear_surd(const BigInt& a, const BigInt& b, const BigInt& d);

// floor((a + b*sqrt(d)) / r) with exact integer arithmetic; r != 0
BigInt floor_quadratic(BigInt a, BigInt b, const BigInt& d, BigInt r);

// A real number of the form (p + q*sqrt(d)) / r held exactly.
class Quadratic {
 public:
  Quadratic(BigInt p, BigInt q, BigInt d, BigInt r);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& d() const { return d_; }
  const BigInt& r() const { return r_; }

  bool is_rational() const;  // q == 0 or d a perfect square

  // sign of (*this - x); exact
  int compare(const Rational& x) const;
  int sign() const;

  BigInt floor_multiple(const BigInt& m) const;  // floor(m * value)

  Quadratic operator+(const Rational& x) const;
  Quadratic operator-(const Rational& x) const;
  // product of two values over the same surd sqrt(d)
  Quadratic operator*(const Quadratic& other) const;

  bool operator==(const Quadratic& other) const;

  // Partial quotients a0, a1, ... of the regular continued fraction.
  // Requires an irrational value.
  std::vector<BigInt> continued_fraction(std::size_t terms) const;

 private:
  BigInt p_, q_, d_, r_;  // canonical: r > 0, gcd(p,q,r) == 1, square part of d folded into q
};

}  // namespace cubewalk
