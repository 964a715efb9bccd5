#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "echoes/perm.hpp"

namespace echoes {

// Square-tiled surface: h maps a square to its right neighbour, v to the one
// above.
class Origami {
public:
  Origami(Permutation h, Permutation v);

  static Origami torus() { return Origami(Permutation::identity(1), Permutation::identity(1)); }

  std::size_t size() const { return h_.degree(); }
  const Permutation &h() const { return h_; }
  const Permutation &v() const { return v_; }
  const Permutation &h_inv() const { return hi_; }
  const Permutation &v_inv() const { return vi_; }

  // Literal equality of the labelled pair; use canonical_form for isomorphism.
  friend bool operator==(const Origami &a, const Origami &b)
  {
    return a.h_ == b.h_ && a.v_ == b.v_;
  }

private:
  Permutation h_, v_, hi_, vi_;
};

struct Stratum {
  std::vector<int> zero_orders; // descending
  int genus = 1;

  std::string to_string() const;
  friend bool operator==(const Stratum &, const Stratum &) = default;
};

// Interleaved (h(i), v(i)) for i in BFS label order.
using CanonicalCode = std::vector<std::uint32_t>;

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode &c) const noexcept;
};

CanonicalCode canonical_form(const Origami &o);
Origami from_canonical(const CanonicalCode &code);
bool isomorphic(const Origami &a, const Origami &b);

Stratum stratum(const Origami &o);

// Cycles of s -> v h v^-1 h^-1 (s); the squares in one cycle share the lower
// left corner.
std::vector<std::vector<Point>> vertex_classes(const Origami &o);

enum class Generator { L, R, L_inv, R_inv, minus_identity };

// L = [[1,0],[1,1]], R = [[1,1],[0,1]], a left action on isomorphism classes.
Origami act_generator(const Origami &o, Generator g);

struct Matrix2 {
  long long a, b, c, d;

  long long det() const { return a * d - b * c; }
  Matrix2 operator*(const Matrix2 &m) const
  {
    return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
  }
  friend bool operator==(const Matrix2 &, const Matrix2 &) = default;

  static Matrix2 identity() { return {1, 0, 0, 1}; }
};

Matrix2 generator_matrix(Generator g);

// Word w_1 ... w_k with M = w_1 * ... * w_k.
std::vector<Generator> sl2z_word(const Matrix2 &m);
Origami act_matrix(const Origami &o, const Matrix2 &m);
bool veech_contains(const Origami &o, const Matrix2 &m);

class OrbitCapExceeded : public std::runtime_error {
public:
  OrbitCapExceeded(std::size_t partial, std::size_t cap);
  std::size_t partial_count() const { return partial_; }

private:
  std::size_t partial_;
};

struct OrbitOptions {
  std::size_t cap = 1'000'000;
  bool record_edges = false;
};

struct OrbitReport {
  std::size_t size = 0;
  std::vector<CanonicalCode> representatives; // sorted
  // edges[i][g] is the index of generator g (order L, R, L_inv, R_inv)
  // applied to representatives[i].
  std::optional<std::vector<std::array<std::uint32_t, 4>>> generator_edges;

  std::optional<std::size_t> index_of(const CanonicalCode &c) const;
};

OrbitReport sl2z_orbit(const Origami &o, const OrbitOptions &opts = {});

std::vector<Permutation> translations(const Origami &o);
Origami quotient_by_translation(const Origami &o, const Permutation &t);

// D = e^2 + 4b = d^2, lambda = (e + d)/2. Squares 0 .. lambda-e-1 form the
// bottom row, the column of lambda squares sits above square 0.
struct LParameters {
  long long b, e, d, lambda;
  long long row() const { return lambda - e; }
};

LParameters l_parameters(long long b, long long e);
Origami l_origami(long long b, long long e);

// "n=<int> h=<cycles> v=<cycles>"
Origami parse_origami(std::string_view text);
std::string to_text(const Origami &o);

} // namespace echoes
