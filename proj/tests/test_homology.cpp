#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "echoes/classify.hpp"
#include "echoes/covers.hpp"
#include "echoes/homology.hpp"

using namespace echoes;

namespace {

Origami random_origami(std::size_t n, std::mt19937 &rng)
{
  for (;;) {
    std::vector<Point> a(n), b(n);
    std::iota(a.begin(), a.end(), 0u);
    std::iota(b.begin(), b.end(), 0u);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::vector<Permutation> g{Permutation(a), Permutation(b)};
    if (is_transitive(g, n))
      return Origami(g[0], g[1]);
  }
}

void expect_symplectic(const Origami &o, const SymplecticBasis &basis)
{
  const std::size_t k = basis.cycles.size();
  ASSERT_EQ(k, 2u * static_cast<std::size_t>(stratum(o).genus));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      long long want = 0;
      if (i / 2 == j / 2 && i != j)
        want = i % 2 == 0 ? 1 : -1;
      EXPECT_EQ(intersection(o, basis.cycles[i], basis.cycles[j]), want) << i << "," << j;
    }
}

// Arf as the value taken by q on 2^(2g-1) + 2^(g-1) classes.
int majority_arf(const Origami &o, const SymplecticBasis &basis)
{
  const std::size_t k = basis.cycles.size();
  std::size_t ones = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    HomologyCycle c;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1)
        c.add(1, basis.cycles[i]);
    if (quadratic_form(o, c) == 1)
      ++ones;
  }
  const std::size_t g = k / 2;
  const std::size_t big = (std::size_t(1) << (2 * g - 1)) + (std::size_t(1) << (g - 1));
  if (ones == big)
    return 1;
  EXPECT_EQ((std::size_t(1) << k) - ones, big);
  return 0;
}

} // namespace

TEST(Homology, WindingIndex)
{
  const Origami t4 = parse_origami("n=4 h=(1,2)(3,4) v=(1,3)(2,4)");
  EXPECT_EQ(winding_index(t4, {0, {Move::east, Move::east}}), 0);
  EXPECT_EQ(winding_index(t4, {0, {Move::east, Move::north, Move::west, Move::south}}), 1);
  EXPECT_EQ(winding_index(t4, {0, {Move::north, Move::east, Move::south, Move::west}}), -1);
  EXPECT_THROW(winding_index(t4, {0, {Move::east, Move::west}}), std::invalid_argument);
  EXPECT_THROW(winding_index(t4, {0, {Move::east}}), std::invalid_argument);
}

TEST(Homology, IntersectionOfCoreLoops)
{
  const Origami t = Origami::torus();
  TaxiPath e{0, {Move::east}}, n{0, {Move::north}};
  EXPECT_EQ(intersection(t, e, n), 1);
  EXPECT_EQ(intersection(t, n, e), -1);
  EXPECT_EQ(intersection(t, e, e), 0);
}

TEST(Homology, SymplecticBasisGramMatrix)
{
  std::mt19937 rng(19);
  int seen2 = 0, seen3 = 0;
  for (int trial = 0; trial < 300 && (seen2 < 20 || seen3 < 20); ++trial) {
    Origami o = random_origami(3 + rng() % 8, rng);
    const int g = stratum(o).genus;
    if (g == 2)
      ++seen2;
    else if (g == 3)
      ++seen3;
    else
      continue;
    expect_symplectic(o, symplectic_basis(o));
  }
  EXPECT_GT(seen2, 0);
  EXPECT_GT(seen3, 0);
}

TEST(Homology, LiftBasisIsSymplectic)
{
  for (const auto &c : all_double_covers(l_origami(6, 1))) {
    Origami up = lift(c);
    expect_symplectic(up, symplectic_basis(up));
  }
}

TEST(Homology, LOrigamiBasisPeriods)
{
  for (long long d = 3; d <= 11; ++d)
    for (long long e : square_spins(d)) {
      const long long b = (d * d - e * e) / 4, lam = (e + d) / 2;
      const Origami o = l_origami(b, e);
      SymplecticBasis basis = l_origami_basis(b, e);
      expect_symplectic(o, basis);
      EXPECT_EQ(period(basis.cycles[0]), (Vec2{1, 0}));
      EXPECT_EQ(period(basis.cycles[1]), (Vec2{0, lam}));
      EXPECT_EQ(period(basis.cycles[2]), (Vec2{lam - e, 0}));
      EXPECT_EQ(period(basis.cycles[3]), (Vec2{0, 1}));
    }
}

TEST(Homology, BasisCoordinatesInvertRealize)
{
  const Origami o = l_origami(12, 1);
  SymplecticBasis basis = symplectic_basis(o);
  HomologyCycle c;
  c.add(3, basis.cycles[0]).add(-2, basis.cycles[1]).add(5, basis.cycles[3]);
  EXPECT_EQ(basis_coordinates(o, basis, c), (std::vector<long long>{3, -2, 0, 5}));
}

TEST(Homology, TwoSurfaceArfExample)
{
  const Origami left = parse_origami("n=6 h=(2,3,5,6) v=(1,2)(4,5)");
  const Origami right = parse_origami("n=6 h=(1,4)(2,3)(5,6) v=(1,2)(4,5)");
  EXPECT_EQ(stratum(left).zero_orders, (std::vector<int>{2, 2}));
  EXPECT_EQ(stratum(right).zero_orders, (std::vector<int>{2, 2}));
  EXPECT_EQ(arf_invariant(left), 1);
  EXPECT_EQ(arf_invariant(right), 0);
  EXPECT_EQ(majority_arf(left, symplectic_basis(left)), 1);
  EXPECT_EQ(majority_arf(right, symplectic_basis(right)), 0);
}

TEST(HomologyProperty, ArfMatchesMajorityAndIsBasisIndependent)
{
  std::mt19937 rng(23);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 40; ++trial) {
    Origami o = random_origami(4 + rng() % 7, rng);
    Stratum s = stratum(o);
    if (s.genus < 2 || s.genus > 3 ||
        std::any_of(s.zero_orders.begin(), s.zero_orders.end(), [](int k) { return k % 2; }))
      continue;
    ++tested;
    const int arf = arf_invariant(o);
    for (Point root = 0; root < o.size(); root += 2) {
      SymplecticBasis basis = symplectic_basis(o, root);
      EXPECT_EQ(arf_invariant(o, basis), arf);
      EXPECT_EQ(majority_arf(o, basis), arf);
    }
  }
  EXPECT_GT(tested, 10);
}

TEST(Homology, ArfOfGenusTwoIsOne)
{
  for (long long d = 3; d <= 9; ++d)
    for (long long e : square_spins(d)) {
      OrbitReport r = sl2z_orbit(l_origami((d * d - e * e) / 4, e));
      for (const auto &c : r.representatives)
        EXPECT_EQ(arf_invariant(from_canonical(c)), 1);
    }
}

TEST(Homology, ArfRejectsOddZeros)
{
  const Origami h11 = parse_origami("n=4 h=(1,2,3,4) v=(1,3)");
  ASSERT_EQ(stratum(h11).zero_orders, (std::vector<int>{1, 1}));
  EXPECT_THROW(arf_invariant(h11), std::invalid_argument);
}

TEST(HomologyProperty, WindingInvariantUnderPushAcrossSquare)
{
  // replacing an east step by north, east, south around a regular square
  const Origami t9 = parse_origami("n=9 h=(1,2,3)(4,5,6)(7,8,9) v=(1,4,7)(2,5,8)(3,6,9)");
  TaxiPath straight{0, {Move::east, Move::east, Move::east}};
  TaxiPath bumped{0, {Move::north, Move::east, Move::south, Move::east, Move::east}};
  ASSERT_TRUE(is_closed(t9, bumped));
  EXPECT_EQ(winding_index(t9, straight), winding_index(t9, bumped));
  EXPECT_EQ(intersection(t9, straight, TaxiPath{0, {Move::north, Move::north, Move::north}}),
            intersection(t9, bumped, TaxiPath{0, {Move::north, Move::north, Move::north}}));
}

TEST(HomologyProperty, IntersectionIsAntisymmetric)
{
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    Origami o = random_origami(3 + rng() % 7, rng);
    CycleSystem cs(o);
    for (std::size_t i = 0; i < cs.rank(); ++i)
      for (std::size_t j = 0; j < cs.rank(); ++j) {
        EXPECT_EQ(cs.omega(i, j), -cs.omega(j, i));
        EXPECT_EQ(cs.omega(i, j), intersection(o, cs.cycles()[i], cs.cycles()[j]));
      }
  }
}

TEST(Homology, ReducedLifts)
{
  for (const auto &c : all_double_covers(l_origami(6, 1))) {
    Origami up = lift(c);
    EXPECT_TRUE(is_reduced(up));
    EXPECT_TRUE(relative_period_lattice(up).is_full());
  }
}

TEST(Homology, HermiteLattice)
{
  EXPECT_EQ(hermite_lattice({{2, 0}, {0, 3}, {1, 1}}), (PeriodLattice{1, 0, 1}));
  EXPECT_EQ(hermite_lattice({{2, 0}, {0, 2}, {1, 1}}), (PeriodLattice{2, 1, 1}));
  EXPECT_EQ(hermite_lattice({{4, 0}, {6, 2}}).index(), 8);
}
