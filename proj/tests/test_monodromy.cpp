#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numeric>
#include <set>

#include "echoes/classify.hpp"
#include "echoes/monodromy.hpp"

using namespace echoes;

namespace {

ResidueMatrix4 mod2(Builtin g, long long b = 0, long long e = 0)
{
  return ResidueMatrix4(builtin_matrix(g, b, e), 2);
}

// Every 4x4 matrix over F2 with M^t J M = J.
std::vector<ResidueMatrix4> brute_sp4_f2()
{
  const IntMatrix4 &j = IntMatrix4::symplectic_form();
  std::vector<ResidueMatrix4> out;
  for (unsigned bits = 0; bits < (1u << 16); ++bits) {
    IntMatrix4 m;
    for (int k = 0; k < 16; ++k)
      m.m[k / 4][k % 4] = bits >> k & 1;
    if (ResidueMatrix4(m.transpose() * j * m, 2) == ResidueMatrix4(j, 2))
      out.emplace_back(m, 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomologyVector apply(const ResidueMatrix4 &m, const HomologyVector &v) { return m * v; }

// Orbits of the group generated by gens on primitive vectors of (Z/n)^4,
// optionally identifying unit multiples.
unsigned long long orbit_count(const std::vector<IntMatrix4> &gens, unsigned n, bool units)
{
  std::vector<ResidueMatrix4> rs;
  for (const auto &g : gens)
    rs.emplace_back(g, n);
  const unsigned total = n * n * n * n;
  std::vector<char> seen(total, 0);
  unsigned long long orbits = 0;
  for (unsigned start = 0; start < total; ++start) {
    HomologyVector s = HomologyVector::from_label(start, n);
    if (seen[start] || !s.is_primitive())
      continue;
    ++orbits;
    std::vector<HomologyVector> stack{s};
    seen[start] = 1;
    while (!stack.empty()) {
      HomologyVector v = stack.back();
      stack.pop_back();
      std::vector<HomologyVector> next;
      for (const auto &r : rs)
        next.push_back(apply(r, v));
      if (units)
        for (unsigned u = 2; u < n; ++u)
          if (std::gcd(u, n) == 1) {
            HomologyVector w = v;
            for (auto &c : w.coords)
              c = c * u % n;
            next.push_back(w);
          }
      for (const auto &w : next)
        if (!seen[w.label()]) {
          seen[w.label()] = 1;
          stack.push_back(w);
        }
    }
  }
  return orbits;
}

std::complex<double> numeric_period(const Vec4 &x)
{
  const double pi = std::acos(-1.0);
  auto xi = [&](int k) { return std::polar(1.0, k * pi / 5); };
  const std::complex<double> a1 = 1.0 + xi(1), b1 = std::conj(a1), a2 = xi(2) - xi(4),
                             b2 = xi(1) - xi(3);
  return double(x[0]) * a1 + double(x[1]) * b1 + double(x[2]) * a2 + double(x[3]) * b2;
}

std::complex<double> to_complex(const CyclotomicElement &z)
{
  const double pi = std::acos(-1.0);
  std::complex<double> s;
  for (int k = 0; k < CyclotomicElement::degree; ++k)
    s += z.coefficients()[k].convert_to<double>() * std::polar(1.0, k * pi / 10);
  return s;
}

Eigen::Matrix4d to_eigen(const IntMatrix4 &m)
{
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = double(m(i, j));
  return a;
}

} // namespace

TEST(Monodromy, SymplecticGroupOverF2)
{
  auto brute = brute_sp4_f2();
  EXPECT_EQ(brute.size(), 720u);
  EXPECT_EQ(sp4_f2(), brute);
}

TEST(Monodromy, ClosureIsAGroup)
{
  for (auto [b, e] : std::vector<std::pair<long long, long long>>{{2, 0}, {4, 1}, {3, -1}, {6, 1}}) {
    auto gens = weierstrass_generators(b, e);
    auto g = group_closure(gens);
    std::set<ResidueMatrix4> set(g.begin(), g.end());
    EXPECT_EQ(set.size(), g.size());
    EXPECT_TRUE(set.count(ResidueMatrix4::identity(2)));
    EXPECT_EQ(720 % g.size(), 0u);
    for (const auto &x : g) {
      EXPECT_TRUE(set.count(x.symplectic_inverse()));
      for (const auto &y : g)
        EXPECT_TRUE(set.count(x * y));
    }
  }
}

TEST(Monodromy, ClosureModThreeDividesSp4)
{
  std::vector<ResidueMatrix4> gens{ResidueMatrix4(builtin_matrix(Builtin::H, 3, 0), 3),
                                   ResidueMatrix4(builtin_matrix(Builtin::V, 3, 0), 3)};
  auto g = group_closure(gens);
  EXPECT_EQ(51840 % g.size(), 0u);
  for (const auto &x : g)
    EXPECT_TRUE(is_symplectic(x));
  EXPECT_THROW(group_closure(gens, 5), ClosureCapExceeded);
}

TEST(Monodromy, WeierstrassGroupOrders)
{
  EXPECT_EQ(group_closure(weierstrass_generators(2, 0)).size(), 8u);
  EXPECT_EQ(group_closure(weierstrass_generators(4, 1)).size(), 12u);
  EXPECT_EQ(group_closure(weierstrass_generators(4, -1)).size(), 12u);
  EXPECT_EQ(group_closure(weierstrass_generators(3, 0)).size(), 8u);
  EXPECT_EQ(group_closure(weierstrass_generators(3, -1)).size(), 10u);
}

TEST(Monodromy, ConstrainedSubgroupMatchesFilter)
{
  const auto &hyp = hyperelliptic_labels();
  for (auto [b, e, want] : std::vector<std::tuple<long long, long long, std::size_t>>{
           {4, 1, 12}, {4, -1, 12}, {6, 1, 12}, {2, 0, 8}, {3, -1, 10}}) {
    const ResidueMatrix4 t = mod2(Builtin::T, b, e);
    std::vector<ResidueMatrix4> filtered;
    for (const auto &m : brute_sp4_f2()) {
      if (!(m * t == t * m))
        continue;
      bool keeps = true;
      for (unsigned l : hyp)
        keeps = keeps && is_hyperelliptic_label((m * HomologyVector::from_label(l, 2)).label());
      if (keeps)
        filtered.push_back(m);
    }
    auto got = constrained_subgroup(t, hyp);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, filtered) << b << "," << e;
    EXPECT_EQ(got.size(), want) << b << "," << e;
    // the monodromy group sits inside it
    for (const auto &g : group_closure(weierstrass_generators(b, e)))
      EXPECT_TRUE(std::binary_search(got.begin(), got.end(), g));
  }
}

TEST(MonodromyProperty, MatrixIdentities)
{
  for (long long b = 2; b <= 40; ++b)
    for (long long e : {-1LL, 0LL, 1LL}) {
      if (!(e + 1 < b) || (e == 1 && b % 2))
        continue;
      const IntMatrix4 t = builtin_matrix(Builtin::T, b, e), h = builtin_matrix(Builtin::H, b, e),
                       v = builtin_matrix(Builtin::V, b, e);
      const IntMatrix4 &j = IntMatrix4::symplectic_form();
      EXPECT_EQ(t * t, t.scaled(e) + IntMatrix4::identity().scaled(b));
      EXPECT_EQ(t.transpose() * j, j * t);
      EXPECT_EQ(h.transpose() * j * h, j);
      EXPECT_EQ(v.transpose() * j * v, j);
      EXPECT_EQ(h * t, t * h);
      EXPECT_EQ(v * t, t * v);
      EXPECT_EQ(h.determinant(), 1);
    }
}

TEST(Monodromy, BuiltinNames)
{
  EXPECT_EQ(builtin_matrix("rhoR"), builtin_matrix(Builtin::rho_R));
  EXPECT_EQ(builtin_matrix("H", 5, 1), builtin_matrix(Builtin::H, 5, 1));
  EXPECT_THROW(builtin_matrix("Q"), std::invalid_argument);
}

TEST(Monodromy, DecagonGroupModTwo)
{
  std::vector<ResidueMatrix4> gens{mod2(Builtin::rho_R), mod2(Builtin::rho_T)};
  auto g = group_closure(gens);
  EXPECT_EQ(g.size(), 10u);
  EXPECT_EQ(dihedral_structure(g), std::optional<std::size_t>(5));
  std::vector<unsigned> labels(15);
  std::iota(labels.begin(), labels.end(), 1u);
  Partition p = orbit_partition(gens, labels);
  ASSERT_EQ(p.size(), 3u);
  for (const auto &block : p) {
    EXPECT_EQ(block.size(), 5u);
    for (unsigned l : block)
      for (const auto &m : gens) {
        unsigned image = (m * HomologyVector::from_label(l, 2)).label();
        EXPECT_TRUE(std::find(block.begin(), block.end(), image) != block.end());
      }
  }
}

TEST(Monodromy, DihedralStructure)
{
  // <H, V> for L(4, 1) has order 6
  std::vector<ResidueMatrix4> hv{mod2(Builtin::H, 4, 1), mod2(Builtin::V, 4, 1)};
  EXPECT_EQ(dihedral_structure(group_closure(hv)), std::optional<std::size_t>(3));
  // cyclic of order 5
  EXPECT_EQ(dihedral_structure(group_closure({mod2(Builtin::rho_R)})), std::nullopt);
  EXPECT_EQ(dihedral_structure({ResidueMatrix4::identity(2)}), std::nullopt);
}

TEST(Monodromy, DecagonCountsAgainstDirectOrbits)
{
  static const std::vector<unsigned long long> printed{3, 1, 3, 8, 3, 1, 3, 1, 24, 3, 3, 1, 3, 8};
  const std::vector<IntMatrix4> gens{builtin_matrix(Builtin::rho_R), builtin_matrix(Builtin::rho_T)};
  for (unsigned n = 2; n <= 15; ++n) {
    const auto got = decagon_cyclic_echo_count(n);
    EXPECT_EQ(got, printed[n - 2]) << n;
    if (n <= 9)
      EXPECT_EQ(got, orbit_count(gens, n, false)) << n;
  }
  EXPECT_THROW(decagon_cyclic_echo_count(1), std::invalid_argument);
}

TEST(Monodromy, DecagonCountsUnitClasses)
{
  static const std::vector<unsigned long long> want{3, 1, 3, 4, 3, 1, 3, 1, 12, 3, 3, 1, 3, 4};
  const std::vector<IntMatrix4> gens{builtin_matrix(Builtin::rho_R), builtin_matrix(Builtin::rho_T)};
  for (unsigned n = 2; n <= 15; ++n) {
    const auto got = decagon_cyclic_echo_count(n, EchoConvention::unit_classes);
    EXPECT_EQ(got, want[n - 2]) << n;
    if (n <= 9)
      EXPECT_EQ(got, orbit_count(gens, n, true)) << n;
  }
}

TEST(Monodromy, DecagonPeriodsNumerically)
{
  const double pi = std::acos(-1.0);
  const std::complex<double> xi = std::polar(1.0, pi / 5);
  const double cot = 1.0 / std::tan(pi / 10);
  const IntMatrix4 rr = builtin_matrix(Builtin::rho_R), rt = builtin_matrix(Builtin::rho_T);
  for (int j = 0; j < 4; ++j) {
    Vec4 e{};
    e[j] = 1;
    const std::complex<double> p = numeric_period(e);
    EXPECT_NEAR(std::abs(to_complex(decagon_period(e)) - p), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(xi * p - numeric_period(rr * e)), 0.0, 1e-12);
    const std::complex<double> sheared = p + 2.0 * cot * p.imag();
    EXPECT_NEAR(std::abs(sheared - numeric_period(rt * e)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(to_complex(decagon_shear(decagon_period(e))) - sheared), 0.0, 1e-12);
  }
  EXPECT_EQ((rr * Vec4{1, 0, 0, 0}), (Vec4{1, -1, 1, 0}));
  EXPECT_EQ((rt * Vec4{0, 0, 0, 1}), (Vec4{0, 0, -1, 0}));
}

TEST(Monodromy, DecagonReport)
{
  DecagonReport r = verify_decagon_periods();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.relations.size(), 8u);
  EXPECT_EQ(r.period_rank, 4u);
  EXPECT_TRUE(r.rho_r5_minus_identity);
  EXPECT_TRUE(r.rho_r10_identity);
}

TEST(Monodromy, RationalRank)
{
  const auto z = CyclotomicElement::zeta_power(1);
  EXPECT_EQ(rational_rank({z, z * Rational(3), z + CyclotomicElement(1)}), 2u);
  EXPECT_EQ(rational_rank({CyclotomicElement(0)}), 0u);
}

TEST(Monodromy, EigenbasisAgainstEigen)
{
  for (long long b : {4LL, 9LL, 25LL}) {
    const long long r = std::llround(std::sqrt(double(b)));
    for (unsigned n : {3u, 7u, 11u}) {
      if (std::gcd<long long>(n, b) != 1)
        continue;
      EigenbasisReport rep = eigenbasis_checks(b, n);
      Eigen::Matrix4d u;
      u.col(0) << double(r), 0, 1, 0;
      u.col(1) << 0, 1, 0, double(r);
      u.col(2) << double(r), 0, -1, 0;
      u.col(3) << 0, 1, 0, -double(r);
      EXPECT_NEAR(u.determinant(), double(rep.eigenbasis_determinant), 1e-9);
      const Eigen::Matrix4d t = to_eigen(builtin_matrix(Builtin::T, b, 0));
      const Eigen::Matrix4d diag = u.inverse() * t * u;
      EXPECT_TRUE(diag.isApprox(Eigen::Vector4d(r, r, -r, -r).asDiagonal().toDenseMatrix(), 1e-12));
      for (Builtin g : {Builtin::H, Builtin::V}) {
        const Eigen::Matrix4d c = u.inverse() * to_eigen(builtin_matrix(g, b, 0)) * u;
        const double off = c.topRightCorner(2, 2).norm() + c.bottomLeftCorner(2, 2).norm();
        EXPECT_NEAR(off, 0.0, 1e-9);
      }
      EXPECT_TRUE(rep.block_diagonal);
      EXPECT_EQ(rep.eigenvectors, std::vector<bool>(4, true));
      EXPECT_EQ(rep.printed_eigenvectors, (std::vector<bool>{true, false, true, false}));
      EXPECT_EQ(rep.determinant, 4 * b);
      EXPECT_EQ(rep.phi, euler_phi(n));
    }
  }
  EXPECT_THROW(eigenbasis_checks(5, 3), std::invalid_argument);
  EXPECT_THROW(eigenbasis_checks(9, 3), std::invalid_argument);
}

TEST(Monodromy, EigenbasisCounterexample)
{
  // fewer <H, V> orbits on primitive vectors than phi(n)
  EigenbasisReport rep = eigenbasis_checks(4, 5);
  EXPECT_EQ(rep.hv_orbits, 3u);
  EXPECT_EQ(rep.phi, 4u);
  const std::vector<IntMatrix4> hv{builtin_matrix(Builtin::H, 4, 0), builtin_matrix(Builtin::V, 4, 0)};
  EXPECT_EQ(orbit_count(hv, 5, false), 3u);
}

TEST(Monodromy, EulerPhi)
{
  const std::vector<unsigned long long> want{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (unsigned n = 1; n <= 12; ++n) {
    unsigned long long c = 0;
    for (unsigned k = 1; k <= n; ++k)
      c += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), c);
    EXPECT_EQ(euler_phi(n), want[n - 1]);
  }
}
