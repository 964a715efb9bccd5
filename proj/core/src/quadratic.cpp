#include "echoes/quadratic.hpp"

#include <stdexcept>

namespace echoes {

namespace {

long long square_root(long long d)
{
  if (d < 0)
    return -1;
  long long r = 0;
  while ((r + 1) * (r + 1) <= d)
    ++r;
  return r * r == d ? r : -1;
}

int sign_of(const Rational &q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

} // namespace

QuadraticElement::QuadraticElement(Rational x, Rational y, long long b, long long e)
    : x_(std::move(x)), y_(std::move(y)), b_(b), e_(e)
{
  const long long d2 = discriminant();
  if (d2 < 5)
    throw std::invalid_argument("quadratic ring needs e^2 + 4b >= 5");
  long long d = square_root(d2);
  if (d >= 0 && y_ != 0) {
    x_ += y_ * Rational(e + d, 2);
    y_ = 0;
  }
}

void QuadraticElement::same_ring(const QuadraticElement &o) const
{
  if (b_ != o.b_ || e_ != o.e_)
    throw std::invalid_argument("elements of different quadratic rings");
}

Rational QuadraticElement::norm() const
{
  if (square_root(discriminant()) >= 0)
    return x_ * x_;
  return x_ * x_ + Rational(e_) * x_ * y_ - Rational(b_) * y_ * y_;
}

int QuadraticElement::sign() const
{
  // p + q sqrt(D)
  Rational p = x_ + y_ * Rational(e_, 2), q = y_ / 2;
  int sp = sign_of(p), sq = sign_of(q);
  if (sq == 0)
    return sp;
  if (sp == 0 || sp == sq)
    return sq;
  Rational lhs = p * p, rhs = q * q * discriminant();
  if (lhs == rhs)
    return 0;
  return lhs > rhs ? sp : sq;
}

QuadraticElement QuadraticElement::inverse() const
{
  Rational n = norm();
  if (n == 0)
    throw std::domain_error("inverse of zero in Q(lambda)");
  // conjugate of x + y lambda is (x + e y) - y lambda
  return {(x_ + Rational(e_) * y_) / n, -y_ / n, b_, e_};
}

QuadraticElement QuadraticElement::operator+(const QuadraticElement &o) const
{
  same_ring(o);
  return {x_ + o.x_, y_ + o.y_, b_, e_};
}

QuadraticElement QuadraticElement::operator-(const QuadraticElement &o) const
{
  same_ring(o);
  return {x_ - o.x_, y_ - o.y_, b_, e_};
}

QuadraticElement QuadraticElement::operator-() const { return {-x_, -y_, b_, e_}; }

QuadraticElement QuadraticElement::operator*(const QuadraticElement &o) const
{
  same_ring(o);
  Rational yy = y_ * o.y_;
  return {x_ * o.x_ + Rational(b_) * yy, x_ * o.y_ + y_ * o.x_ + Rational(e_) * yy, b_, e_};
}

bool operator==(const QuadraticElement &a, const QuadraticElement &b)
{
  a.same_ring(b);
  return a.x_ == b.x_ && a.y_ == b.y_;
}

} // namespace echoes
