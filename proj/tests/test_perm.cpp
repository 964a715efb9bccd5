#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "echoes/perm.hpp"

using namespace echoes;

namespace {

Permutation random_perm(std::size_t n, std::mt19937 &rng)
{
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

} // namespace

TEST(Perm, ComposeIdentityAndInvolution)
{
  Permutation p = parse_cycles("(1,3,2)(4,5)", 5);
  EXPECT_EQ(compose(Permutation::identity(5), p), p);
  EXPECT_TRUE(compose(parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2)).is_identity());
}

TEST(Perm, ComposeIsPAfterQ)
{
  Permutation p = parse_cycles("(1,2)", 5), q = parse_cycles("(2,3,4,5)", 5);
  Permutation r = compose(p, q);
  // 1-based: 2->3, 3->4, 4->5, 5->1, 1->2
  const std::vector<Point> want{1, 2, 3, 4, 0};
  for (Point x = 0; x < 5; ++x)
    EXPECT_EQ(r(x), want[x]);
  for (Point x = 0; x < 5; ++x)
    EXPECT_EQ(r(x), p(q(x)));
}

TEST(Perm, ComposeDegreeMismatchThrows)
{
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST(Perm, CommutatorOfFiveSquarePair)
{
  Permutation a = parse_cycles("(1,2)", 5), b = parse_cycles("(2,3,4,5)", 5);
  Permutation c = commutator(a, b);
  // pointwise a(b(a^-1(b^-1(x))))
  for (Point x = 0; x < 5; ++x)
    EXPECT_EQ(c(x), a(b(a.inverse()(b.inverse()(x)))));
  EXPECT_EQ(c, parse_cycles("(1,3,2)", 5));
  EXPECT_TRUE(commutator(a, a).is_identity());
  EXPECT_TRUE(commutator(Permutation::identity(5), b).is_identity());
}

TEST(Perm, Transitivity)
{
  std::vector<Permutation> g{parse_cycles("(1,2)", 5), parse_cycles("(2,3,4,5)", 5)};
  EXPECT_TRUE(is_transitive(g, 5));
  std::vector<Permutation> id{Permutation::identity(2)};
  EXPECT_FALSE(is_transitive(id, 2));
  std::vector<Permutation> two{parse_cycles("(1,2)(3,4)", 4)};
  EXPECT_FALSE(is_transitive(two, 4));
}

TEST(Perm, ParseAndFormat)
{
  Permutation p = parse_cycles("(1,2)(3,4)", 4);
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(2), 3u);
  EXPECT_TRUE(parse_cycles("", 3).is_identity());
  Permutation q = parse_cycles("(2,3,4,5)", 5);
  EXPECT_EQ(q(0), 0u);
  EXPECT_EQ(format_cycles(q), "(2,3,4,5)");
  EXPECT_EQ(format_cycles(parse_cycles("(4,3)(2,1)", 4)), "(1,2)(3,4)");
  EXPECT_EQ(parse_cycles("(1 5 4 3 2)", 5), parse_cycles("(1,5,4,3,2)", 5));
}

TEST(Perm, ParseErrors)
{
  EXPECT_THROW(parse_cycles("(1,2", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1,1)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1,2)(2,3)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(1,4)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(0,1)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(a,b)", 3), std::invalid_argument);
}

TEST(PermProperty, RoundTripAndGroupLaws)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    Permutation p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
    EXPECT_EQ(parse_cycles(format_cycles(p), n), p);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    EXPECT_EQ(compose(p, q).inverse(), compose(q.inverse(), p.inverse()));
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_TRUE(power(p, static_cast<long long>(p.order())).is_identity());
    Permutation g = random_perm(n, rng);
    EXPECT_EQ(commutator(conjugate(p, g), conjugate(q, g)).cycle_type(), commutator(p, q).cycle_type());
  }
}

TEST(PermProperty, CyclesPartitionMovedPoints)
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = random_perm(1 + rng() % 10, rng);
    std::size_t moved = 0;
    for (Point x = 0; x < p.degree(); ++x)
      moved += p(x) != x;
    std::size_t total = 0;
    for (const auto &c : p.cycles()) {
      total += c.size();
      EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
    }
    EXPECT_EQ(total, moved);
  }
}
