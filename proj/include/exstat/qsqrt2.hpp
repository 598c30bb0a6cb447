#pragma once

// Exact arithmetic in the quadratic field Q(sqrt 2): numbers a + b*sqrt(2)
// with rational a, b.  Lets unitaries with sqrt(2)/2 entries act exactly, so
// span membership after a rotation stays a yes/no fact.

#include <cmath>
#include <string>

#include "exstat/rational.hpp"

namespace exstat {

struct Q2Scalar {
  ExactScalar a;  // rational part
  ExactScalar b;  // coefficient of sqrt(2)

  Q2Scalar() : a(0), b(0) {}
  Q2Scalar(long v) : a(v), b(0) {}  // NOLINT: implicit by design
  Q2Scalar(ExactScalar ra) : a(std::move(ra)), b(0) {}
  Q2Scalar(ExactScalar ra, ExactScalar rb)
      : a(std::move(ra)), b(std::move(rb)) {}

  static Q2Scalar sqrt2() { return {ExactScalar(0), ExactScalar(1)}; }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool is_rational() const { return sgn(b) == 0; }

  Q2Scalar operator-() const { return {-a, -b}; }
  Q2Scalar& operator+=(const Q2Scalar& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Q2Scalar& operator-=(const Q2Scalar& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Q2Scalar& operator*=(const Q2Scalar& o) {
    ExactScalar na = a * o.a + ExactScalar(2) * b * o.b;
    ExactScalar nb = a * o.b + b * o.a;
    a = na;
    b = nb;
    return *this;
  }

  friend Q2Scalar operator+(Q2Scalar x, const Q2Scalar& y) { return x += y; }
  friend Q2Scalar operator-(Q2Scalar x, const Q2Scalar& y) { return x -= y; }
  friend Q2Scalar operator*(Q2Scalar x, const Q2Scalar& y) { return x *= y; }
  friend bool operator==(const Q2Scalar& x, const Q2Scalar& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Q2Scalar& x, const Q2Scalar& y) {
    return !(x == y);
  }

  // (a + b sqrt2)^{-1} = (a - b sqrt2) / (a^2 - 2 b^2); the norm vanishes
  // only at zero since sqrt(2) is irrational.
  Q2Scalar inverse() const {
    ExactScalar norm = a * a - ExactScalar(2) * b * b;
    if (sgn(norm) == 0)
      throw std::invalid_argument("Q2Scalar: division by zero");
    return {a / norm, -b / norm};
  }
  friend Q2Scalar operator/(const Q2Scalar& x, const Q2Scalar& y) {
    return x * y.inverse();
  }

  double to_double() const {
    return exstat::to_double(a) + exstat::to_double(b) * std::sqrt(2.0);
  }
  std::string str() const {
    if (sgn(b) == 0) return to_string(a);
    std::string s;
    if (sgn(a) != 0) s += to_string(a) + (sgn(b) > 0 ? "+" : "");
    if (b == ExactScalar(1)) return s + "sqrt2";
    if (b == ExactScalar(-1)) return s + "-sqrt2";
    return s + to_string(b) + "*sqrt2";
  }
};

}  // namespace exstat
