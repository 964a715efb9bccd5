#pragma once

#include "echoes/rational.hpp"

namespace echoes {

// x + y lambda with lambda^2 = e lambda + b, ordered through the real
// embedding lambda = (e + sqrt D)/2, D = e^2 + 4b. For square D the element is
// kept rational (y = 0).
class QuadraticElement {
public:
  QuadraticElement(Rational x, Rational y, long long b, long long e);
  QuadraticElement(Rational x, long long b, long long e) : QuadraticElement(std::move(x), 0, b, e) {}

  static QuadraticElement lambda(long long b, long long e) { return {0, 1, b, e}; }

  const Rational &x() const { return x_; }
  const Rational &y() const { return y_; }
  long long b() const { return b_; }
  long long e() const { return e_; }
  long long discriminant() const { return e_ * e_ + 4 * b_; }
  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  // x^2 + e x y - b y^2
  Rational norm() const;
  int sign() const;
  QuadraticElement inverse() const;

  QuadraticElement operator+(const QuadraticElement &o) const;
  QuadraticElement operator-(const QuadraticElement &o) const;
  QuadraticElement operator-() const;
  QuadraticElement operator*(const QuadraticElement &o) const;
  QuadraticElement operator/(const QuadraticElement &o) const { return *this * o.inverse(); }

  friend bool operator==(const QuadraticElement &a, const QuadraticElement &b);
  friend bool operator<(const QuadraticElement &a, const QuadraticElement &b)
  {
    return (a - b).sign() < 0;
  }

private:
  void same_ring(const QuadraticElement &o) const;

  Rational x_, y_;
  long long b_, e_;
};

} // namespace echoes
