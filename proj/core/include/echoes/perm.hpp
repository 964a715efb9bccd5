#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace echoes {

using Point = std::uint32_t;

// Bijection of {0..n-1}; images()[i] is the image of i.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // Nontrivial cycles, each starting at its least element, sorted.
  std::vector<std::vector<Point>> cycles() const;
  // Lengths of nontrivial cycles, descending.
  std::vector<std::size_t> cycle_type() const;
  std::size_t order() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

// compose(p, q)(x) = p(q(x)).
Permutation compose(const Permutation &p, const Permutation &q);
// p q p^-1 q^-1 under compose.
Permutation commutator(const Permutation &p, const Permutation &q);
// g p g^-1.
Permutation conjugate(const Permutation &p, const Permutation &g);
Permutation power(const Permutation &p, long long k);

bool is_transitive(std::span<const Permutation> gens, std::size_t n);

// 1-based disjoint cycle text, e.g. "(1,2)(3,4)". Spaces are accepted as
// separators too, so "(1 2)" parses.
Permutation parse_cycles(std::string_view text, std::size_t n);
std::string format_cycles(const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace echoes
