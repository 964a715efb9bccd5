#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "echoes/classify.hpp"
#include "echoes/covers.hpp"

using namespace echoes;

namespace {

Partition sorted(Partition p)
{
  std::sort(p.begin(), p.end());
  return p;
}

std::size_t total(const Partition &p)
{
  std::size_t n = 0;
  for (const auto &b : p)
    n += b.size();
  return n;
}

long long mod4(long long x) { return (x % 4 + 4) % 4; }

// Closed-form label conditions; nullopt where none applies.
std::optional<bool> closed_condition(long long d, long long e, unsigned label)
{
  switch (label) {
  case 1:
  case 8:
  case 9:
    return true;
  case 2:
    return mod4(d - e) == 2;
  case 4:
    return mod4(d + e) == 2;
  case 5:
    return mod4(d + e) == 0;
  case 7:
    return e == 0 || mod4(d + e) == 0;
  case 10:
    return mod4(d - e) == 0;
  default:
    return std::nullopt;
  }
}

// (a_n, b_n) by direct orbit computation of the two L-origamis with n squares.
std::pair<std::size_t, std::size_t> orbit_sizes(long long n)
{
  std::size_t spin0 = 0, spin1 = 0;
  for (long long e : square_spins(n)) {
    const std::size_t s = sl2z_orbit(l_origami((n * n - e * e) / 4, e)).size;
    (mod4(n - e) == 0 ? spin0 : spin1) = s;
  }
  return {spin0, spin1};
}

} // namespace

TEST(Classify, HyperellipticLabels)
{
  EXPECT_EQ(hyperelliptic_labels(), (std::vector<unsigned>{2, 3, 5, 9, 13}));
  EXPECT_TRUE(is_hyperelliptic_label(13));
  EXPECT_EQ(HomologyVector::from_label(13, 2).coords, (std::array<unsigned, 4>{1, 0, 1, 1}));
  unsigned others = 0;
  for (unsigned l = 1; l <= 15; ++l)
    others += !is_hyperelliptic_label(l);
  EXPECT_EQ(others, 10u);
}

TEST(Classify, WeierstrassParameters)
{
  EXPECT_EQ(weierstrass_parameters(8), (std::pair<long long, long long>{2, 0}));
  EXPECT_EQ(weierstrass_parameters(12), (std::pair<long long, long long>{3, 0}));
  EXPECT_EQ(weierstrass_parameters(13), (std::pair<long long, long long>{3, -1}));
  EXPECT_EQ(weierstrass_parameters(17, 1), (std::pair<long long, long long>{4, 1}));
  EXPECT_EQ(weierstrass_parameters(17, -1), (std::pair<long long, long long>{4, -1}));
  EXPECT_THROW(weierstrass_parameters(7), std::invalid_argument);
  EXPECT_THROW(weierstrass_parameters(4), std::invalid_argument);
  EXPECT_THROW(weierstrass_parameters(13, 0), std::invalid_argument);
  // D = 5 with e = 1 gives b = 1
  EXPECT_THROW(weierstrass_parameters(5, 1), std::invalid_argument);
  EXPECT_THROW(weierstrass_parameters(21, 1), std::invalid_argument);
}

TEST(Classify, EchoPartitionsByResidue)
{
  EchoTable d5 = echoes_of_WD(13);
  EXPECT_EQ(sorted(d5.hyp), (Partition{{2, 3, 5, 9, 13}}));
  EXPECT_EQ(sorted(d5.odd), (Partition{{1, 8, 11, 12, 14}, {4, 6, 7, 10, 15}}));
  EXPECT_EQ(d5.echo_count(), 3u);
  EXPECT_EQ(d5.group_order, 10u);

  EchoTable d0 = echoes_of_WD(8);
  EXPECT_EQ(sorted(d0.hyp), (Partition{{2}, {3, 5, 9, 13}}));
  EXPECT_EQ(sorted(d0.odd), (Partition{{1, 7, 11, 15}, {4, 6}, {8, 10, 12, 14}}));
  EXPECT_EQ(d0.group_order, 8u);

  EchoTable d1 = echoes_of_WD(17, 1);
  EXPECT_EQ(sorted(d1.odd), (Partition{{1, 6, 8, 11, 12, 15}, {4, 10, 14}, {7}}));
  EXPECT_EQ(sorted(d1.hyp), (Partition{{2, 5}, {3, 9, 13}}));
  EXPECT_EQ(d1.group_order, 12u);

  EchoTable d4 = echoes_of_WD(12);
  EXPECT_EQ(sorted(d4.hyp), (Partition{{2, 3, 9, 13}, {5}}));
  EXPECT_EQ(sorted(d4.odd), (Partition{{1, 4, 11, 14}, {6, 7, 8, 12}, {10, 15}}));
}

TEST(ClassifyProperty, EchoesDependOnlyOnDModEight)
{
  std::map<long long, std::pair<Partition, Partition>> seen;
  for (long long dd = 8; dd <= 60; ++dd) {
    if (dd % 4 == 2 || dd % 4 == 3)
      continue;
    std::vector<std::optional<int>> spins{std::nullopt};
    if (dd % 2)
      spins.push_back(1);
    for (auto e : spins) {
      EchoTable t;
      try {
        t = echoes_of_WD(dd, e);
      } catch (const std::invalid_argument &) {
        continue;
      }
      EXPECT_EQ(total(t.hyp), 5u) << dd;
      EXPECT_EQ(total(t.odd), 10u) << dd;
      for (const auto &b : t.hyp)
        for (unsigned l : b)
          EXPECT_TRUE(is_hyperelliptic_label(l));
      auto key = std::make_pair(sorted(t.hyp), sorted(t.odd));
      auto [it, fresh] = seen.emplace(dd % 8, key);
      if (!fresh)
        EXPECT_EQ(it->second, key) << "D=" << dd;
    }
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Classify, EchoDegree)
{
  EXPECT_EQ(echo_degree({2, 3, 5, 9, 13}), 5u);
  EXPECT_EQ(echo_degree({7}), 1u);
  std::vector<unsigned> labels(15);
  std::iota(labels.begin(), labels.end(), 1u);
  std::vector<ResidueMatrix4> gens{ResidueMatrix4(builtin_matrix(Builtin::rho_R), 2),
                                   ResidueMatrix4(builtin_matrix(Builtin::rho_T), 2)};
  for (const auto &b : orbit_partition(gens, labels))
    EXPECT_EQ(echo_degree(b), 5u);
}

TEST(Classify, PrimitivityExamples)
{
  EXPECT_TRUE(is_primitive_cover(11, -1, 10));
  EXPECT_FALSE(is_primitive_cover(11, -1, 2));
  EXPECT_TRUE(is_primitive_cover(5, 1, 1));
  EXPECT_TRUE(primitive_cover_oracle(3, -1, HomologyVector::from_label(1, 2)));
  EXPECT_FALSE(primitive_cover_oracle(5, 1, HomologyVector::from_label(2, 2)));
  EXPECT_THROW(is_primitive_cover(5, 1, 0), std::invalid_argument);
  EXPECT_THROW(is_primitive_cover(5, 0, 1), std::invalid_argument);
  EXPECT_THROW(primitive_cover_oracle(5, 1, HomologyVector(Vec4{0, 0, 0, 0}, 2)), std::invalid_argument);
}

TEST(ClassifyProperty, PrimitivityAgreesWithConditionsAndOracle)
{
  for (long long d = 3; d <= 30; ++d)
    for (long long e : square_spins(d)) {
      PrimitivityRecord rec = primitivity_record(d, e);
      ASSERT_EQ(rec.primitive.size(), 15u);
      for (unsigned l = 1; l <= 15; ++l) {
        const bool closed = is_primitive_cover(d, e, l);
        EXPECT_EQ(closed, primitive_cover_oracle(d, e, HomologyVector::from_label(l, 2)));
        EXPECT_EQ(rec.primitive[l - 1], closed);
        EXPECT_EQ(rec.index[l - 1], closed ? 1 : 2);
        if (auto want = closed_condition(d, e, l))
          EXPECT_EQ(closed, *want) << d << " " << e << " " << l;
      }
    }
}

TEST(ClassifyProperty, PrimitivityConstantOnBlocks)
{
  for (long long d = 3; d <= 25; ++d)
    for (long long e : square_spins(d)) {
      EchoTable t = echoes_of_WD(d * d, e);
      for (const Partition *p : {&t.hyp, &t.odd})
        for (const auto &block : *p)
          for (unsigned l : block)
            EXPECT_EQ(is_primitive_cover(d, e, l), is_primitive_cover(d, e, block.front()));
    }
}

TEST(Classify, PrimitiveEchoTable)
{
  auto t = primitive_echo_table(4, 0);
  EXPECT_EQ(residue_class(4, 0), (std::pair<long long, long long>{0, 0}));
  EXPECT_EQ(sorted(t.hyp), (Partition{{3, 5, 9, 13}}));
  EXPECT_EQ(sorted(t.odd), (Partition{{1, 7, 11, 15}, {8, 10, 12, 14}}));

  for (auto [d, e] : std::vector<std::pair<long long, long long>>{{5, -1}, {7, 1}, {9, -1}}) {
    EXPECT_EQ(residue_class(d, e).second, 2);
    auto r = primitive_echo_table(d, e);
    EXPECT_EQ(sorted(r.hyp), (Partition{{2, 5}, {3, 9, 13}}));
    EXPECT_EQ(sorted(r.odd), (Partition{{1, 6, 8, 11, 12, 15}, {7}}));
  }
  auto u = primitive_echo_table(6, 0);
  EXPECT_EQ(residue_class(6, 0), (std::pair<long long, long long>{2, 2}));
  EXPECT_EQ(sorted(u.hyp), (Partition{{2, 3, 9, 13}}));
  EXPECT_EQ(sorted(u.odd), (Partition{{1, 4, 11, 14}, {6, 7, 8, 12}}));
}

TEST(Classify, BranchedCoverTypes)
{
  EXPECT_EQ(branched_cover_types(3), 3u);
  EXPECT_EQ(branched_cover_types(4), 3u);
  EXPECT_EQ(branched_cover_types(5), 7u);
  for (long long d = 6; d <= 14; ++d)
    EXPECT_EQ(branched_cover_types(d), d % 2 ? 7u : 3u) << d;
}

TEST(Classify, SquareSpins)
{
  EXPECT_EQ(square_spins(3), (std::vector<long long>{-1}));
  EXPECT_EQ(square_spins(4), (std::vector<long long>{0}));
  EXPECT_EQ(square_spins(5), (std::vector<long long>{-1, 1}));
  EXPECT_THROW(square_spins(2), std::invalid_argument);
}

TEST(Classify, CountFormulasAgainstOrbits)
{
  EXPECT_EQ(count_formulas(11).a, 225u);
  EXPECT_EQ(count_formulas(11).b, std::optional<unsigned long long>(180));
  EXPECT_EQ(count_formulas(5).a, 18u);
  EXPECT_EQ(count_formulas(5).b, std::optional<unsigned long long>(9));
  EXPECT_EQ(count_formulas(7).a, 54u);
  EXPECT_EQ(count_formulas(7).b, std::optional<unsigned long long>(36));
  EXPECT_EQ(count_formulas(3).b, std::nullopt);
  for (long long n : {5, 7, 9, 11}) {
    auto [a, b] = orbit_sizes(n);
    EXPECT_EQ(a, count_formulas(n).a) << n;
    EXPECT_EQ(b, count_formulas(n).b.value()) << n;
  }
  EXPECT_THROW(count_formulas(4), std::invalid_argument);
  EXPECT_THROW(count_formulas(1), std::invalid_argument);
}

TEST(Classify, StsCensusSmall)
{
  for (unsigned n : {3u, 4u, 5u, 6u, 7u}) {
    StsCensus c = verify_sts_orbits(n);
    EXPECT_EQ(c.orbit_count(), c.expected_orbit_count()) << n;
    EXPECT_EQ(c.orbit_count(), n % 2 && n >= 5 ? 10u : 5u);
    for (const auto &comp : c.components) {
      EXPECT_TRUE(comp.all_lifts_accounted);
      EXPECT_TRUE(comp.blocks_match_table);
      EXPECT_TRUE(comp.arf_matches_labels);
      EXPECT_TRUE(comp.sizes_match_blocks);
      std::vector<unsigned> labels;
      for (const auto &o : comp.orbits) {
        labels.insert(labels.end(), o.labels.begin(), o.labels.end());
        const bool hyp = is_hyperelliptic_label(o.labels.front());
        EXPECT_EQ(o.arf, hyp ? 0 : 1);
        if (o.translations == 2)
          EXPECT_EQ(o.size, comp.base_orbit * o.labels.size());
      }
      std::sort(labels.begin(), labels.end());
      std::vector<unsigned> all(15);
      std::iota(all.begin(), all.end(), 1u);
      EXPECT_EQ(labels, all);
    }
  }
}

TEST(Classify, StsWNineSpecialCover)
{
  StsCensus c = verify_sts_orbits(3);
  ASSERT_EQ(c.components.size(), 1u);
  std::size_t special = 0;
  for (const auto &o : c.components[0].orbits)
    if (o.translations != 2) {
      ++special;
      EXPECT_EQ(o.labels, std::vector<unsigned>{7});
      EXPECT_EQ(o.translations, 6u);
    }
  EXPECT_EQ(special, 1u);
}

TEST(Classify, StsElevenSquares)
{
  StsCensus c = verify_sts_orbits(11);
  EXPECT_EQ(c.orbit_count(), 10u);
  std::map<long long, std::vector<std::size_t>> sizes;
  for (const auto &comp : c.components) {
    std::vector<std::size_t> s;
    for (const auto &o : comp.orbits)
      s.push_back(o.size);
    sizes[comp.e] = s;
  }
  EXPECT_EQ(sizes[-1], (std::vector<std::size_t>{1350, 450, 675, 675, 225}));
  EXPECT_EQ(sizes[1], (std::vector<std::size_t>{1080, 360, 540, 540, 180}));
  EXPECT_THROW(verify_sts_orbits(12), std::out_of_range);
  EXPECT_THROW(verify_sts_orbits(2), std::invalid_argument);
}

TEST(Classify, CyclicEchoOrbits)
{
  EXPECT_EQ(cyclic_echo_orbits(4, 0, 3), (std::vector<std::size_t>{36, 36, 288}));
  const auto five = cyclic_echo_orbits(4, 0, 5);
  EXPECT_EQ(five, (std::vector<std::size_t>{54, 54, 1296}));
  // fewer orbits than phi(5)
  EXPECT_LT(five.size(), euler_phi(5));
  // total: orbit size times number of cover classes
  const std::size_t base = sl2z_orbit(l_origami(4, 0)).size;
  // primitive classes up to the 4 units of Z/5 give isomorphic lifts
  EXPECT_EQ(std::accumulate(five.begin(), five.end(), std::size_t{0}), base * 624 / 4);
}
