#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "echoes/origami.hpp"

namespace echoes {

// Unit moves between square centres, counterclockwise order.
enum class Move : std::uint8_t { east = 0, north = 1, west = 2, south = 3 };

Move opposite(Move m);

struct TaxiPath {
  Point start = 0;
  std::vector<Move> moves;

  friend bool operator==(const TaxiPath &, const TaxiPath &) = default;
};

using Vec2 = std::array<long long, 2>;

Point step(const Origami &o, Point s, Move m);
Point endpoint(const Origami &o, const TaxiPath &p);
bool is_closed(const Origami &o, const TaxiPath &p);
Vec2 displacement(const TaxiPath &p);

// Turning number of the smoothed closed path, (left turns - right turns)/4.
// Throws on open paths and on immediate backtracking.
int winding_index(const Origami &o, const TaxiPath &p);

// Algebraic intersection, <E loop, N loop> = +1.
long long intersection(const Origami &o, const TaxiPath &a, const TaxiPath &b);

// Integer combination of closed taxi paths.
struct HomologyCycle {
  std::vector<std::pair<long long, TaxiPath>> terms;

  HomologyCycle() = default;
  HomologyCycle(TaxiPath p) { terms.emplace_back(1, std::move(p)); }

  HomologyCycle &add(long long k, const HomologyCycle &c);
  friend HomologyCycle operator+(HomologyCycle a, const HomologyCycle &b) { return a.add(1, b); }
  friend HomologyCycle operator-(HomologyCycle a, const HomologyCycle &b) { return a.add(-1, b); }
};

long long intersection(const Origami &o, const HomologyCycle &a, const HomologyCycle &b);
Vec2 period(const HomologyCycle &c);

// Fundamental cycles of a BFS spanning tree of the square adjacency graph.
// There are n + 1 of them, one per cotree edge; they span H_1.
class CycleSystem {
public:
  explicit CycleSystem(const Origami &o, Point root = 0);

  const Origami &origami() const { return o_; }
  std::size_t rank() const { return cycles_.size(); }
  const std::vector<TaxiPath> &cycles() const { return cycles_; }
  long long omega(std::size_t i, std::size_t j) const { return omega_[i * rank() + j]; }
  int spin(std::size_t i) const { return spin_[i]; }

  // Signed traversal counts of the cotree edges; the class of the path as a
  // combination of the fundamental cycles.
  std::vector<long long> coordinates(const TaxiPath &p) const;
  std::vector<long long> coordinates(const HomologyCycle &c) const;

  long long pairing(const std::vector<long long> &x, const std::vector<long long> &y) const;
  // Quadratic form (Ind + 1 on simple curves) mod 2.
  int quadratic_form(const std::vector<long long> &x) const;
  HomologyCycle realize(const std::vector<long long> &x) const;

  // Translation from the lower-left corner of the root to that of s along
  // the tree.
  Vec2 corner_displacement(Point s) const { return corner_[s]; }

  // Cotree edge index for (s, east) or (s, north), or -1 for tree edges.
  long long cotree_index(Point s, Move m) const;

private:
  Origami o_;
  std::vector<TaxiPath> cycles_;
  std::vector<long long> omega_;
  std::vector<int> spin_;
  std::vector<Vec2> corner_;
  std::vector<long long> east_index_, north_index_;
};

struct SymplecticBasis {
  std::vector<HomologyCycle> cycles; // a1, b1, a2, b2, ...
  std::size_t genus() const { return cycles.size() / 2; }
};

SymplecticBasis symplectic_basis(const Origami &o, Point root = 0);

// Coordinates (x1, y1, x2, y2, ...) of c = sum x_i a_i + y_i b_i.
std::vector<long long> basis_coordinates(const Origami &o, const SymplecticBasis &basis,
                                         const HomologyCycle &c);

int quadratic_form(const Origami &o, const HomologyCycle &c);
int arf_invariant(const Origami &o, const SymplecticBasis &basis);
// Computed on two bases and cross-checked.
int arf_invariant(const Origami &o);

// Hermite basis (a, 0), (b, d) with a, d > 0 and 0 <= b < a.
struct PeriodLattice {
  long long a = 0, b = 0, d = 0;

  long long index() const { return a * d; }
  bool is_full() const { return index() == 1; }
  friend bool operator==(const PeriodLattice &, const PeriodLattice &) = default;
};

PeriodLattice hermite_lattice(const std::vector<Vec2> &generators);
PeriodLattice absolute_period_lattice(const Origami &o);
PeriodLattice relative_period_lattice(const Origami &o);
bool is_reduced(const Origami &o);

// The marked basis (a1, b1, a2, b2) of l_origami(b, e): a1 through a column
// square, b1 the column core minus b2, a2 the row, b2 through a row square.
SymplecticBasis l_origami_basis(long long b, long long e);

} // namespace echoes
