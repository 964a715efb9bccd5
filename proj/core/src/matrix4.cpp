#include "echoes/matrix4.hpp"

#include <numeric>
#include <stdexcept>

namespace echoes {

namespace {

unsigned reduce(long long x, unsigned mod)
{
  long long r = x % static_cast<long long>(mod);
  return static_cast<unsigned>(r < 0 ? r + mod : r);
}

void check_modulus(unsigned mod)
{
  if (mod < 2 || mod > 255)
    throw std::invalid_argument("residue modulus must lie in 2..255");
}

} // namespace

IntMatrix4 IntMatrix4::identity()
{
  IntMatrix4 r;
  for (int i = 0; i < 4; ++i)
    r.m[i][i] = 1;
  return r;
}

const IntMatrix4 &IntMatrix4::symplectic_form()
{
  static const IntMatrix4 j = [] {
    IntMatrix4 r;
    r.m[0][1] = 1;
    r.m[1][0] = -1;
    r.m[2][3] = 1;
    r.m[3][2] = -1;
    return r;
  }();
  return j;
}

IntMatrix4 IntMatrix4::operator*(const IntMatrix4 &o) const
{
  IntMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      if (m[i][k])
        for (int j = 0; j < 4; ++j)
          r.m[i][j] += m[i][k] * o.m[k][j];
  return r;
}

Vec4 IntMatrix4::operator*(const Vec4 &x) const
{
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r[i] += m[i][j] * x[j];
  return r;
}

IntMatrix4 IntMatrix4::operator+(const IntMatrix4 &o) const
{
  IntMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

IntMatrix4 IntMatrix4::operator-(const IntMatrix4 &o) const
{
  return *this + o.scaled(-1);
}

IntMatrix4 IntMatrix4::scaled(long long k) const
{
  IntMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.m[i][j] = k * m[i][j];
  return r;
}

IntMatrix4 IntMatrix4::transpose() const
{
  IntMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.m[i][j] = m[j][i];
  return r;
}

long long IntMatrix4::determinant() const
{
  // cofactor expansion along the first row of 3x3 minors
  auto det3 = [&](int skip) {
    int c[3], k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != skip)
        c[k++] = j;
    const auto &a = m[1], &b = m[2], &d = m[3];
    return a[c[0]] * (b[c[1]] * d[c[2]] - b[c[2]] * d[c[1]]) -
           a[c[1]] * (b[c[0]] * d[c[2]] - b[c[2]] * d[c[0]]) +
           a[c[2]] * (b[c[0]] * d[c[1]] - b[c[1]] * d[c[0]]);
  };
  long long r = 0;
  for (int j = 0; j < 4; ++j)
    r += (j % 2 ? -1 : 1) * m[0][j] * det3(j);
  return r;
}

IntMatrix4 power(const IntMatrix4 &a, unsigned k)
{
  IntMatrix4 r = IntMatrix4::identity(), base = a;
  while (k) {
    if (k & 1)
      r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

long long symplectic_pairing(const Vec4 &x, const Vec4 &y)
{
  return x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
}

ResidueMatrix4::ResidueMatrix4(const IntMatrix4 &a, unsigned mod) : mod_(mod)
{
  check_modulus(mod);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      e_[i * 4 + j] = static_cast<std::uint8_t>(reduce(a.m[i][j], mod));
}

ResidueMatrix4 ResidueMatrix4::identity(unsigned mod)
{
  return ResidueMatrix4(IntMatrix4::identity(), mod);
}

ResidueMatrix4 ResidueMatrix4::operator*(const ResidueMatrix4 &o) const
{
  if (mod_ != o.mod_)
    throw std::invalid_argument("residue matrices with different moduli");
  ResidueMatrix4 r;
  r.mod_ = mod_;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      unsigned s = 0;
      for (int k = 0; k < 4; ++k)
        s += static_cast<unsigned>(e_[i * 4 + k]) * o.e_[k * 4 + j];
      r.e_[i * 4 + j] = static_cast<std::uint8_t>(s % mod_);
    }
  return r;
}

ResidueMatrix4 ResidueMatrix4::symplectic_inverse() const
{
  const IntMatrix4 &j = IntMatrix4::symplectic_form();
  return ResidueMatrix4((j * lift().transpose() * j).scaled(-1), mod_);
}

IntMatrix4 ResidueMatrix4::lift() const
{
  IntMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.m[i][j] = e_[i * 4 + j];
  return r;
}

std::size_t ResidueMatrix4Hash::operator()(const ResidueMatrix4 &m) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.entries())
    h = (h ^ x) * 1099511628211ull;
  return h;
}

HomologyVector::HomologyVector(const Vec4 &x, unsigned mod) : modulus(mod)
{
  check_modulus(mod);
  for (int i = 0; i < 4; ++i)
    coords[i] = reduce(x[i], mod);
}

HomologyVector HomologyVector::from_label(unsigned label, unsigned mod)
{
  check_modulus(mod);
  HomologyVector v;
  v.modulus = mod;
  for (int i = 0; i < 4; ++i) {
    v.coords[i] = label % mod;
    label /= mod;
  }
  if (label)
    throw std::invalid_argument("label out of range for the modulus");
  return v;
}

unsigned HomologyVector::label() const
{
  unsigned r = 0;
  for (int i = 3; i >= 0; --i)
    r = r * modulus + coords[i];
  return r;
}

bool HomologyVector::is_primitive() const
{
  unsigned g = modulus;
  for (unsigned c : coords)
    g = std::gcd(g, c);
  return g == 1;
}

HomologyVector operator*(const ResidueMatrix4 &a, const HomologyVector &x)
{
  if (a.modulus() != x.modulus)
    throw std::invalid_argument("matrix and vector with different moduli");
  HomologyVector r;
  r.modulus = x.modulus;
  for (int i = 0; i < 4; ++i) {
    unsigned s = 0;
    for (int j = 0; j < 4; ++j)
      s += a(i, j) * x.coords[j];
    r.coords[i] = s % x.modulus;
  }
  return r;
}

} // namespace echoes
