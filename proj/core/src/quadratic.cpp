#include "cubewalk/quadratic.hpp"

#include <boost/integer/common_factor.hpp>
#include <stdexcept>
#include <utility>

#include "cubewalk/error.hpp"

namespace cubewalk {

namespace {

int sgn(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// largest s with s*s dividing n (n > 0, trial division)
BigInt square_part(BigInt n) {
  BigInt s = 1;
  for (BigInt f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      s *= f;
    }
  }
  return s;
}

}  // namespace

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt s = sqrt(n);
  return s * s == n;
}

int sign_of_linear_surd(const BigInt& a, const BigInt& b, const BigInt& d) {
  if (b == 0 || d == 0) return sgn(a);
  if (a == 0) return sgn(b);
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  // opposite signs: compare a^2 against b^2*d
  const BigInt a2 = a * a;
  const BigInt b2d = b * b * d;
  if (a2 == b2d) return 0;
  if (a > 0) return a2 > b2d ? 1 : -1;  // b < 0
  return b2d > a2 ? 1 : -1;             // a < 0, b > 0
}

BigInt floor_quadratic(BigInt a, BigInt b, const BigInt& d, BigInt r) {
  if (r == 0) throw Error(ErrorKind::IndexOutOfRange, "zero denominator");
  if (r < 0) {
    a = -a;
    b = -b;
    r = -r;
  }
  // initial guess from the integer square root, then fix with the exact test
  BigInt surd = sqrt(b * b * d);  // floor(|b|*sqrt(d))
  if (b < 0) surd = -surd - 1;
  BigInt k = (a + surd) / r - 2;
  auto at_most_value = [&](const BigInt& c) {
    // c <= (a + b*sqrt(d))/r  <=>  c*r - a <= b*sqrt(d)
    return sign_of_linear_surd(a - c * r, b, d) >= 0;
  };
  while (at_most_value(k + 1)) ++k;
  while (!at_most_value(k)) --k;
  return k;
}

Quadratic::Quadratic(BigInt p, BigInt q, BigInt d, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  if (r_ == 0) throw Error(ErrorKind::InvalidSpec, "quadratic with zero denominator");
  if (d_ < 0) throw Error(ErrorKind::InvalidSpec, "negative radicand");
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (d_ > 0 && q_ != 0) {
    const BigInt s = square_part(d_);
    q_ *= s;
    d_ /= s * s;
  }
  if (d_ == 1 || d_ == 0) {  // surd collapses to an integer
    p_ += q_ * d_;
    q_ = 0;
    d_ = 0;
  }
  if (q_ == 0) d_ = 0;
  BigInt g = boost::integer::gcd(boost::integer::gcd(abs(p_), abs(q_)), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

bool Quadratic::is_rational() const { return q_ == 0; }

int Quadratic::compare(const Rational& x) const {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);  // > 0 by cpp_rational invariant
  return sign_of_linear_surd(p_ * den - num * r_, q_ * den, d_);
}

int Quadratic::sign() const { return sign_of_linear_surd(p_, q_, d_); }

BigInt Quadratic::floor_multiple(const BigInt& m) const {
  return floor_quadratic(m * p_, m * q_, d_, r_);
}

Quadratic Quadratic::operator+(const Rational& x) const {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  return Quadratic(p_ * den + num * r_, q_ * den, d_, r_ * den);
}

Quadratic Quadratic::operator-(const Rational& x) const { return *this + (-x); }

Quadratic Quadratic::operator*(const Quadratic& other) const {
  if (d_ != other.d_ && q_ != 0 && other.q_ != 0)
    throw Error(ErrorKind::InvalidSpec, "product of quadratics over different surds");
  const BigInt d = q_ != 0 ? d_ : other.d_;
  return Quadratic(p_ * other.p_ + q_ * other.q_ * d, p_ * other.q_ + q_ * other.p_, d,
                   r_ * other.r_);
}

bool Quadratic::operator==(const Quadratic& other) const {
  return p_ == other.p_ && q_ == other.q_ && d_ == other.d_ && r_ == other.r_;
}

std::vector<BigInt> Quadratic::continued_fraction(std::size_t terms) const {
  if (is_rational())
    throw Error(ErrorKind::NotIrrational, "continued fraction of a rational value");
  // bring (p + q*sqrt(d))/r to the classical (P + sqrt(D))/Q form with Q | D - P^2
  BigInt D = q_ * q_ * d_;
  BigInt P = q_ > 0 ? p_ : -p_;
  BigInt Q = q_ > 0 ? r_ : -r_;
  if ((D - P * P) % Q != 0) {
    P *= abs(Q);
    D *= Q * Q;
    Q *= abs(Q);
  }
  std::vector<BigInt> out;
  out.reserve(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const BigInt a = floor_quadratic(P, 1, D, Q);
    out.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  return out;
}

}  // namespace cubewalk
