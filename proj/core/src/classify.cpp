#include "echoes/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "echoes/covers.hpp"
#include "echoes/homology.hpp"
#include "echoes/origami.hpp"
#include "echoes/rational.hpp"

namespace echoes {

namespace {

const std::vector<unsigned> &all_labels()
{
  static const std::vector<unsigned> labels = [] {
    std::vector<unsigned> l(15);
    std::iota(l.begin(), l.end(), 1u);
    return l;
  }();
  return labels;
}

long long mod4(long long x) { return ((x % 4) + 4) % 4; }

void check_square(long long d, long long e)
{
  if (d < 3)
    throw std::invalid_argument("square discriminant needs d >= 3");
  if (e < -1 || e > 1 || (d - e) % 2)
    throw std::invalid_argument("e must be in {-1,0,1} with e = d mod 2");
  weierstrass_parameters(d * d, static_cast<int>(e));
}

// Closed-form primitivity condition for the label, if there is one.
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

long long gcd_of_minors(const std::vector<Vec2> &gens)
{
  long long g = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      g = std::gcd(g, gens[i][0] * gens[j][1] - gens[i][1] * gens[j][0]);
  return g;
}

long long oracle_index(long long d, long long e, const HomologyVector &gamma)
{
  check_square(d, e);
  if (gamma.modulus != 2 || gamma.is_zero())
    throw std::invalid_argument("primitive_cover_oracle: expects a nonzero class mod 2");
  const long long lam = (e + d) / 2;
  // f(a1) = y1, f(b1) = x1, f(a2) = y2, f(b2) = x2
  const auto &g = gamma.coords;
  const std::array<unsigned, 4> f{g[1], g[0], g[3], g[2]};
  std::size_t j = 0;
  while (f[j] == 0)
    ++j;
  std::vector<Vec4> kernel;
  for (std::size_t i = 0; i < 4; ++i) {
    Vec4 v{};
    v[i] = 2;
    kernel.push_back(v);
    if (i == j)
      continue;
    Vec4 w{};
    w[i] = 1;
    if (f[i])
      w[j] = 1;
    kernel.push_back(w);
  }
  std::vector<Vec2> images;
  for (const auto &c : kernel)
    images.push_back({c[0] + (lam - e) * c[2], lam * c[1] + c[3]});
  return gcd_of_minors(images);
}

bool same_partition(Partition a, Partition b)
{
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

} // namespace

const std::vector<unsigned> &hyperelliptic_labels()
{
  static const std::vector<unsigned> labels{2, 3, 5, 9, 13};
  return labels;
}

bool is_hyperelliptic_label(unsigned label)
{
  const auto &h = hyperelliptic_labels();
  return std::find(h.begin(), h.end(), label) != h.end();
}

std::pair<long long, long long> weierstrass_parameters(long long d_disc, std::optional<int> e)
{
  if (d_disc < 5 || (d_disc % 4 != 0 && d_disc % 4 != 1))
    throw std::invalid_argument("discriminant must be >= 5 and 0 or 1 mod 4");
  const long long ee = e ? *e : (d_disc % 2 ? -1 : 0);
  if (ee < -1 || ee > 1 || (d_disc - ee) % 2)
    throw std::invalid_argument("e must be in {-1,0,1} with e = D mod 2");
  const long long b = (d_disc - ee * ee) / 4;
  if (ee + 1 >= b)
    throw std::invalid_argument("no L-shaped prototype: e + 1 < b fails");
  if (ee == 1 && b % 2)
    throw std::invalid_argument("no L-shaped prototype: e = 1 needs b even");
  return {b, ee};
}

std::vector<ResidueMatrix4> weierstrass_generators(long long b, long long e)
{
  std::vector<ResidueMatrix4> gens{ResidueMatrix4(builtin_matrix(Builtin::H, b, e), 2),
                                   ResidueMatrix4(builtin_matrix(Builtin::V, b, e), 2)};
  if ((e * e + 4 * b) % 8 == 1)
    gens.emplace_back(builtin_matrix(Builtin::X), 2);
  return gens;
}

EchoTable echoes_of_WD(long long d_disc, std::optional<int> e)
{
  auto [b, ee] = weierstrass_parameters(d_disc, e);
  auto gens = weierstrass_generators(b, ee);
  EchoTable t;
  t.discriminant = d_disc;
  t.b = b;
  t.e = ee;
  t.group_order = group_closure(gens).size();
  for (auto &block : orbit_partition(gens, all_labels())) {
    const bool hyp = is_hyperelliptic_label(block.front());
    for (unsigned l : block)
      if (is_hyperelliptic_label(l) != hyp)
        throw std::logic_error("echoes_of_WD: orbit mixes the two components");
    (hyp ? t.hyp : t.odd).push_back(std::move(block));
  }
  return t;
}

std::size_t echo_degree(const std::vector<unsigned> &block) { return block.size(); }

bool is_primitive_cover(long long d, long long e, unsigned label)
{
  check_square(d, e);
  if (label < 1 || label > 15)
    throw std::invalid_argument("cover labels are 1..15");
  EchoTable t = echoes_of_WD(d * d, static_cast<int>(e));
  for (const auto *part : {&t.hyp, &t.odd})
    for (const auto &block : *part) {
      if (std::find(block.begin(), block.end(), label) == block.end())
        continue;
      std::optional<bool> value;
      for (unsigned l : block) {
        auto c = closed_condition(d, e, l);
        if (!c)
          continue;
        if (value && *value != *c)
          throw std::logic_error("closed-form primitivity conditions disagree inside an orbit");
        value = c;
      }
      if (!value)
        throw std::logic_error("orbit without a label covered by a closed-form condition");
      return *value;
    }
  throw std::logic_error("label missing from the partition");
}

bool primitive_cover_oracle(long long d, long long e, const HomologyVector &gamma)
{
  return oracle_index(d, e, gamma) == 1;
}

PrimitivityRecord primitivity_record(long long d, long long e)
{
  PrimitivityRecord r;
  r.d = d;
  r.e = e;
  for (unsigned l : all_labels()) {
    r.primitive.push_back(is_primitive_cover(d, e, l));
    r.index.push_back(static_cast<int>(oracle_index(d, e, HomologyVector::from_label(l, 2))));
  }
  return r;
}

std::pair<long long, long long> residue_class(long long d, long long e)
{
  return {mod4(d), mod4(d - e)};
}

EchoTable primitive_echo_table(long long d, long long e)
{
  check_square(d, e);
  EchoTable t = echoes_of_WD(d * d, static_cast<int>(e));
  auto keep = [&](Partition &p) {
    std::erase_if(p, [&](const std::vector<unsigned> &block) {
      return !is_primitive_cover(d, e, block.front());
    });
  };
  keep(t.hyp);
  keep(t.odd);
  return t;
}

std::vector<long long> square_spins(long long d)
{
  if (d < 3)
    throw std::invalid_argument("d must be at least 3");
  std::vector<long long> out;
  for (long long e : {-1LL, 0LL, 1LL}) {
    if ((d - e) % 2)
      continue;
    try {
      weierstrass_parameters(d * d, static_cast<int>(e));
      out.push_back(e);
    } catch (const std::invalid_argument &) {
    }
  }
  return out;
}

std::size_t branched_cover_types(long long d)
{
  std::size_t total = 0;
  for (long long e : square_spins(d))
    total += primitive_echo_table(d, e).echo_count();
  return total;
}

OrbitCounts count_formulas(unsigned long long n)
{
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("count_formulas needs odd n >= 3");
  Rational a = Rational(3, 16) * Rational(n - 1) * Rational(n) * Rational(n);
  unsigned long long m = n;
  for (unsigned long long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      a *= Rational(1) - Rational(1, p * p);
      while (m % p == 0)
        m /= p;
    }
  if (m > 1)
    a *= Rational(1) - Rational(1, m * m);
  auto as_integer = [](const Rational &r) {
    if (boost::multiprecision::denominator(r) != 1)
      throw std::logic_error("orbit count formula is not an integer");
    return static_cast<unsigned long long>(boost::multiprecision::numerator(r));
  };
  OrbitCounts out;
  out.a = as_integer(a);
  if (n > 3)
    out.b = as_integer(Rational(n - 3, n - 1) * a);
  return out;
}

std::size_t StsCensus::orbit_count() const
{
  std::size_t c = 0;
  for (const auto &comp : components)
    c += comp.orbits.size();
  return c;
}

StsCensus verify_sts_orbits(unsigned n, unsigned max_n)
{
  if (n < 3)
    throw std::invalid_argument("verify_sts_orbits needs n >= 3");
  if (n > max_n)
    throw std::out_of_range("verify_sts_orbits: n = " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(max_n));
  StsCensus census;
  census.n = n;
  const long long d = n;
  for (long long e : square_spins(d)) {
    ComponentCensus comp;
    comp.e = e;
    comp.b = (d * d - e * e) / 4;
    const Origami base = l_origami(comp.b, e);
    OrbitReport base_orbit = sl2z_orbit(base);
    comp.base_orbit = base_orbit.size;

    std::unordered_map<CanonicalCode, std::size_t, CanonicalCodeHash> where;
    auto locate = [&](const Origami &o) {
      CanonicalCode code = canonical_form(o);
      auto it = where.find(code);
      if (it != where.end())
        return std::pair{it->second, false};
      const std::size_t idx = comp.orbits.size();
      OrbitReport rep = sl2z_orbit(o);
      for (const auto &c : rep.representatives)
        where.emplace(c, idx);
      LiftedOrbit lo;
      lo.size = rep.size;
      lo.arf = arf_invariant(o);
      lo.primitive = absolute_period_lattice(o).is_full();
      lo.translations = translations(o).size();
      comp.orbits.push_back(lo);
      return std::pair{idx, true};
    };

    const SymplecticBasis basis = l_origami_basis(comp.b, e);
    const auto covers = double_covers(base, basis);
    comp.arf_matches_labels = true;
    for (unsigned label = 1; label <= covers.size(); ++label) {
      Origami up = lift(covers[label - 1]);
      auto [idx, fresh] = locate(up);
      comp.orbits[idx].labels.push_back(label);
      if ((arf_invariant(up) == 0) != is_hyperelliptic_label(label))
        comp.arf_matches_labels = false;
    }
    const std::size_t from_labels = comp.orbits.size();

    for (const auto &code : base_orbit.representatives) {
      const Origami o = from_canonical(code);
      for (const auto &c : all_double_covers(o))
        locate(lift(c));
    }
    comp.all_lifts_accounted = comp.orbits.size() == from_labels;

    Partition blocks;
    comp.sizes_match_blocks = true;
    for (const auto &lo : comp.orbits) {
      blocks.push_back(lo.labels);
      if (lo.translations == 2 && lo.size != comp.base_orbit * lo.labels.size())
        comp.sizes_match_blocks = false;
      if (!lo.labels.empty() && (lo.arf == 0) != is_hyperelliptic_label(lo.labels.front()))
        comp.arf_matches_labels = false;
    }
    EchoTable table = echoes_of_WD(d * d, static_cast<int>(e));
    Partition expected = table.hyp;
    expected.insert(expected.end(), table.odd.begin(), table.odd.end());
    comp.blocks_match_table = comp.all_lifts_accounted && same_partition(blocks, expected);

    std::stable_sort(comp.orbits.begin(), comp.orbits.end(),
                     [](const LiftedOrbit &x, const LiftedOrbit &y) {
                       if (x.labels.empty() || y.labels.empty())
                         return !x.labels.empty() && y.labels.empty();
                       return x.labels.front() < y.labels.front();
                     });
    census.components.push_back(std::move(comp));
  }
  return census;
}

std::vector<std::size_t> cyclic_echo_orbits(long long b, long long e, unsigned n)
{
  const Origami base = l_origami(b, e);
  OrbitReport base_orbit = sl2z_orbit(base);
  std::set<CanonicalCode> lifts;
  for (const auto &code : base_orbit.representatives) {
    const Origami o = from_canonical(code);
    for (const auto &c : cyclic_covers(o, n))
      lifts.insert(canonical_form(lift(c)));
  }
  std::set<CanonicalCode> seen;
  std::vector<std::size_t> sizes;
  for (const auto &code : lifts) {
    if (seen.count(code))
      continue;
    OrbitReport rep = sl2z_orbit(from_canonical(code));
    for (const auto &c : rep.representatives) {
      if (!lifts.count(c))
        throw std::logic_error("cyclic_echo_orbits: orbit leaves the set of lifts");
      seen.insert(c);
    }
    sizes.push_back(rep.size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace echoes
