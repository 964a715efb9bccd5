#include "echoes/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace echoes {

namespace {

using Poly = std::vector<Rational>;

// x^8 = x^6 - x^4 + x^2 - 1
CyclotomicElement::Coefficients reduce(Poly p)
{
  constexpr int n = CyclotomicElement::degree;
  for (int k = static_cast<int>(p.size()) - 1; k >= n; --k) {
    if (p[k] == 0)
      continue;
    Rational t = p[k];
    p[k] = 0;
    p[k - 2] += t;
    p[k - 4] -= t;
    p[k - 6] += t;
    p[k - 8] -= t;
  }
  CyclotomicElement::Coefficients c{};
  for (int i = 0; i < n && i < static_cast<int>(p.size()); ++i)
    c[i] = p[i];
  return c;
}

} // namespace

CyclotomicElement CyclotomicElement::zeta_power(long long k)
{
  long long r = ((k % 20) + 20) % 20;
  Poly p(static_cast<std::size_t>(r) + 1, 0);
  p[r] = 1;
  return CyclotomicElement(reduce(std::move(p)));
}

bool CyclotomicElement::is_zero() const
{
  for (const auto &q : c_)
    if (q != 0)
      return false;
  return true;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement &o) const
{
  CyclotomicElement r = *this;
  for (int i = 0; i < degree; ++i)
    r.c_[i] += o.c_[i];
  return r;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement &o) const
{
  CyclotomicElement r = *this;
  for (int i = 0; i < degree; ++i)
    r.c_[i] -= o.c_[i];
  return r;
}

CyclotomicElement CyclotomicElement::operator-() const { return CyclotomicElement() - *this; }

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement &o) const
{
  Poly p(2 * degree - 1, 0);
  for (int i = 0; i < degree; ++i) {
    if (c_[i] == 0)
      continue;
    for (int j = 0; j < degree; ++j)
      if (o.c_[j] != 0)
        p[i + j] += c_[i] * o.c_[j];
  }
  return CyclotomicElement(reduce(std::move(p)));
}

CyclotomicElement CyclotomicElement::operator*(const Rational &q) const
{
  CyclotomicElement r = *this;
  for (auto &x : r.c_)
    x *= q;
  return r;
}

CyclotomicElement CyclotomicElement::inverse() const
{
  if (is_zero())
    throw std::domain_error("inverse of zero in Q(zeta)");
  // Solve (multiplication by *this) y = 1.
  std::vector<std::vector<Rational>> a(degree, std::vector<Rational>(degree + 1, 0));
  for (int j = 0; j < degree; ++j) {
    CyclotomicElement col = *this * zeta_power(j);
    for (int i = 0; i < degree; ++i)
      a[i][j] = col.c_[i];
  }
  a[0][degree] = 1;
  for (int col = 0; col < degree; ++col) {
    int piv = col;
    while (a[piv][col] == 0)
      ++piv;
    std::swap(a[piv], a[col]);
    for (int r = 0; r < degree; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational f = a[r][col] / a[col][col];
      for (int k = col; k <= degree; ++k)
        a[r][k] -= f * a[col][k];
    }
  }
  Coefficients y{};
  for (int i = 0; i < degree; ++i)
    y[i] = a[i][degree] / a[i][i];
  return CyclotomicElement(y);
}

CyclotomicElement CyclotomicElement::conj() const
{
  CyclotomicElement r;
  for (int i = 0; i < degree; ++i)
    if (c_[i] != 0)
      r = r + zeta_power(-i) * c_[i];
  return r;
}

std::string to_string(const CyclotomicElement &x)
{
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < CyclotomicElement::degree; ++i) {
    const Rational &q = x.coefficients()[i];
    if (q == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    os << '(' << to_string(q) << ')';
    if (i)
      os << "z^" << i;
  }
  return first ? "0" : os.str();
}

} // namespace echoes
