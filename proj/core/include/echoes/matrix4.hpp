#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace echoes {

// Coordinates (x1, y1, x2, y2) in the basis (a1, b1, a2, b2).
using Vec4 = std::array<long long, 4>;

struct IntMatrix4 {
  std::array<std::array<long long, 4>, 4> m{};

  static IntMatrix4 identity();
  // J = diag([[0,1],[-1,0]], [[0,1],[-1,0]])
  static const IntMatrix4 &symplectic_form();

  long long &operator()(int i, int j) { return m[i][j]; }
  long long operator()(int i, int j) const { return m[i][j]; }

  IntMatrix4 operator*(const IntMatrix4 &o) const;
  Vec4 operator*(const Vec4 &x) const;
  IntMatrix4 operator+(const IntMatrix4 &o) const;
  IntMatrix4 operator-(const IntMatrix4 &o) const;
  IntMatrix4 scaled(long long k) const;
  IntMatrix4 transpose() const;
  long long determinant() const;

  friend bool operator==(const IntMatrix4 &, const IntMatrix4 &) = default;
};

IntMatrix4 power(const IntMatrix4 &a, unsigned k);

// x . y = sum x_{2i} y_{2i+1} - x_{2i+1} y_{2i}
long long symplectic_pairing(const Vec4 &x, const Vec4 &y);

// Entries reduced to 0 .. mod-1; 2 <= mod <= 255.
class ResidueMatrix4 {
public:
  using Entries = std::array<std::uint8_t, 16>;

  ResidueMatrix4() = default;
  ResidueMatrix4(const IntMatrix4 &a, unsigned mod);

  static ResidueMatrix4 identity(unsigned mod);

  unsigned modulus() const { return mod_; }
  unsigned operator()(int i, int j) const { return e_[i * 4 + j]; }
  const Entries &entries() const { return e_; }

  ResidueMatrix4 operator*(const ResidueMatrix4 &o) const;
  // -J M^t J, valid for symplectic M.
  ResidueMatrix4 symplectic_inverse() const;
  IntMatrix4 lift() const;

  friend bool operator==(const ResidueMatrix4 &a, const ResidueMatrix4 &b)
  {
    return a.mod_ == b.mod_ && a.e_ == b.e_;
  }
  friend auto operator<=>(const ResidueMatrix4 &a, const ResidueMatrix4 &b)
  {
    return a.e_ <=> b.e_;
  }

private:
  unsigned mod_ = 2;
  Entries e_{};
};

struct ResidueMatrix4Hash {
  std::size_t operator()(const ResidueMatrix4 &m) const noexcept;
};

// Residue vector; label x1 + m y1 + m^2 x2 + m^3 y2.
struct HomologyVector {
  std::array<unsigned, 4> coords{};
  unsigned modulus = 2;

  HomologyVector() = default;
  HomologyVector(const Vec4 &x, unsigned mod);

  static HomologyVector from_label(unsigned label, unsigned mod);
  unsigned label() const;
  bool is_zero() const { return coords == std::array<unsigned, 4>{}; }
  // coordinates generate Z/m
  bool is_primitive() const;

  friend bool operator==(const HomologyVector &, const HomologyVector &) = default;
};

HomologyVector operator*(const ResidueMatrix4 &a, const HomologyVector &x);

} // namespace echoes
