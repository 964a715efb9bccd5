#pragma once

#include <array>
#include <string>

#include "echoes/rational.hpp"

namespace echoes {

// Element of Q(zeta), zeta = exp(i pi / 10), in the power basis 1, zeta, ...,
// zeta^7 modulo Phi_20(x) = x^8 - x^6 + x^4 - x^2 + 1.
class CyclotomicElement {
public:
  static constexpr int degree = 8;
  using Coefficients = std::array<Rational, degree>;

  CyclotomicElement() = default;
  explicit CyclotomicElement(const Coefficients &c) : c_(c) {}
  CyclotomicElement(long long x) { c_[0] = x; }

  // zeta^k for any integer k.
  static CyclotomicElement zeta_power(long long k);

  const Coefficients &coefficients() const { return c_; }
  bool is_zero() const;

  CyclotomicElement operator+(const CyclotomicElement &o) const;
  CyclotomicElement operator-(const CyclotomicElement &o) const;
  CyclotomicElement operator-() const;
  CyclotomicElement operator*(const CyclotomicElement &o) const;
  CyclotomicElement operator*(const Rational &q) const;
  // Throws on zero.
  CyclotomicElement inverse() const;
  CyclotomicElement operator/(const CyclotomicElement &o) const { return *this * o.inverse(); }

  // Complex conjugation, zeta -> zeta^-1.
  CyclotomicElement conj() const;

  friend bool operator==(const CyclotomicElement &, const CyclotomicElement &) = default;

private:
  Coefficients c_{};
};

std::string to_string(const CyclotomicElement &x);

} // namespace echoes
