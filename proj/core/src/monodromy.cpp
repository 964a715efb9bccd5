#include "echoes/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace echoes {

namespace {

IntMatrix4 from_rows(std::array<std::array<long long, 4>, 4> rows)
{
  IntMatrix4 r;
  r.m = rows;
  return r;
}

long long mod_reduce(long long x, long long n)
{
  long long r = x % n;
  return r < 0 ? r + n : r;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

// Components of the primitive vectors mod n under the given matrices.
struct PrimitiveGraph {
  unsigned n;
  std::vector<char> primitive;
  UnionFind uf;

  explicit PrimitiveGraph(unsigned mod) : n(mod), primitive(std::size_t(mod) * mod * mod * mod, 0),
                                          uf(primitive.size())
  {
    for (unsigned label = 0; label < primitive.size(); ++label)
      primitive[label] = HomologyVector::from_label(label, n).is_primitive();
  }

  void add(const ResidueMatrix4 &m)
  {
    for (unsigned label = 0; label < primitive.size(); ++label)
      if (primitive[label])
        uf.unite(label, (m * HomologyVector::from_label(label, n)).label());
  }

  std::size_t components()
  {
    std::size_t c = 0;
    for (unsigned label = 0; label < primitive.size(); ++label)
      if (primitive[label] && uf.find(label) == label)
        ++c;
    return c;
  }
};

} // namespace

IntMatrix4 builtin_matrix(Builtin which, long long b, long long e)
{
  switch (which) {
  case Builtin::H:
    return from_rows({{{1, b, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}});
  case Builtin::V:
    return from_rows({{{1, 0, 0, 0}, {1, 1, 1, 0}, {0, 0, 1, 0}, {1, 0, b - e, 1}}});
  case Builtin::T:
    return from_rows({{{e, 0, b, 0}, {0, e, 0, 1}, {1, 0, 0, 0}, {0, b, 0, 0}}});
  case Builtin::X:
    return from_rows({{{0, 1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}}});
  case Builtin::rho_R:
    return from_rows({{{1, 1, 1, 0}, {-1, 0, 0, 0}, {1, 0, 0, 1}, {0, 0, -1, 0}}});
  case Builtin::rho_T:
    return from_rows({{{2, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, -1}, {0, 0, 1, 0}}});
  case Builtin::J:
    return IntMatrix4::symplectic_form();
  }
  throw std::invalid_argument("unknown builtin matrix");
}

IntMatrix4 builtin_matrix(std::string_view name, long long b, long long e)
{
  static const std::map<std::string_view, Builtin> names{
      {"H", Builtin::H},         {"V", Builtin::V},         {"T", Builtin::T}, {"X", Builtin::X},
      {"rhoR", Builtin::rho_R}, {"rhoT", Builtin::rho_T}, {"J", Builtin::J}};
  auto it = names.find(name);
  if (it == names.end())
    throw std::invalid_argument("unknown builtin matrix \"" + std::string(name) + "\"");
  return builtin_matrix(it->second, b, e);
}

bool is_symplectic(const IntMatrix4 &m)
{
  const IntMatrix4 &j = IntMatrix4::symplectic_form();
  return m.transpose() * j * m == j;
}

bool is_symplectic(const ResidueMatrix4 &m)
{
  const unsigned n = m.modulus();
  ResidueMatrix4 j(IntMatrix4::symplectic_form(), n);
  return ResidueMatrix4(m.lift().transpose(), n) * j * m == j;
}

bool commutes(const IntMatrix4 &a, const IntMatrix4 &b) { return a * b == b * a; }
bool commutes(const ResidueMatrix4 &a, const ResidueMatrix4 &b) { return a * b == b * a; }

bool self_adjoint(const IntMatrix4 &t)
{
  const IntMatrix4 &j = IntMatrix4::symplectic_form();
  return t.transpose() * j == j * t;
}

ClosureCapExceeded::ClosureCapExceeded(std::size_t cap)
    : std::runtime_error("group closure exceeded " + std::to_string(cap) + " elements")
{
}

std::vector<ResidueMatrix4> group_closure(const std::vector<ResidueMatrix4> &gens, std::size_t cap)
{
  if (gens.empty())
    throw std::invalid_argument("group_closure: no generators");
  const unsigned n = gens.front().modulus();
  std::vector<ResidueMatrix4> moves;
  for (const auto &g : gens) {
    if (g.modulus() != n)
      throw std::invalid_argument("group_closure: generators with different moduli");
    if (!is_symplectic(g))
      throw std::invalid_argument("group_closure: generator is not symplectic");
    moves.push_back(g);
    moves.push_back(g.symplectic_inverse());
  }
  std::unordered_set<ResidueMatrix4, ResidueMatrix4Hash> seen{ResidueMatrix4::identity(n)};
  std::deque<ResidueMatrix4> queue{ResidueMatrix4::identity(n)};
  while (!queue.empty()) {
    ResidueMatrix4 x = queue.front();
    queue.pop_front();
    for (const auto &g : moves) {
      ResidueMatrix4 y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw ClosureCapExceeded(cap);
        queue.push_back(y);
      }
    }
  }
  std::vector<ResidueMatrix4> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ResidueMatrix4> sp4_f2()
{
  // transvections x -> x + <c,x> c over the 15 nonzero c
  std::vector<ResidueMatrix4> gens;
  const IntMatrix4 &j = IntMatrix4::symplectic_form();
  for (unsigned label = 1; label < 16; ++label) {
    HomologyVector c = HomologyVector::from_label(label, 2);
    IntMatrix4 cc;
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s)
        cc.m[r][s] = c.coords[r] * c.coords[s];
    gens.emplace_back(IntMatrix4::identity() + cc * j, 2);
  }
  return group_closure(gens);
}

std::vector<ResidueMatrix4> constrained_subgroup(const ResidueMatrix4 &t2,
                                                 const std::vector<unsigned> &labels)
{
  if (t2.modulus() != 2)
    throw std::invalid_argument("constrained_subgroup: expects a mod-2 matrix");
  std::unordered_set<unsigned> set(labels.begin(), labels.end());
  std::vector<ResidueMatrix4> out;
  for (const auto &g : sp4_f2()) {
    if (!commutes(g, t2))
      continue;
    bool keeps = std::all_of(labels.begin(), labels.end(), [&](unsigned l) {
      return set.count((g * HomologyVector::from_label(l, 2)).label()) > 0;
    });
    if (keeps)
      out.push_back(g);
  }
  return out;
}

std::optional<std::size_t> dihedral_structure(const std::vector<ResidueMatrix4> &group)
{
  const std::size_t order = group.size();
  if (order < 2 || order % 2)
    return std::nullopt;
  const std::size_t k = order / 2;
  const unsigned n = group.front().modulus();
  const ResidueMatrix4 id = ResidueMatrix4::identity(n);

  for (const auto &r : group) {
    std::vector<ResidueMatrix4> cyclic{id};
    for (ResidueMatrix4 x = r; !(x == id); x = x * r)
      cyclic.push_back(x);
    if (cyclic.size() != k)
      continue;
    ResidueMatrix4 r_inv = r.symplectic_inverse();
    for (const auto &s : group) {
      if (std::find(cyclic.begin(), cyclic.end(), s) != cyclic.end())
        continue;
      if (s * s == id && s * r * s == r_inv)
        return k;
    }
  }
  return std::nullopt;
}

Partition orbit_partition(const std::vector<ResidueMatrix4> &gens, const std::vector<unsigned> &labels)
{
  std::unordered_map<unsigned, std::uint32_t> index;
  for (unsigned l : labels)
    index.emplace(l, static_cast<std::uint32_t>(index.size()));
  UnionFind uf(index.size());
  for (const auto &g : gens)
    for (unsigned l : labels) {
      unsigned img = (g * HomologyVector::from_label(l, g.modulus())).label();
      auto it = index.find(img);
      if (it == index.end())
        throw std::invalid_argument("orbit_partition: vectors are not closed under the generators");
      uf.unite(index[l], it->second);
    }
  std::map<std::uint32_t, std::vector<unsigned>> blocks;
  for (unsigned l : labels)
    blocks[uf.find(index[l])].push_back(l);
  Partition out;
  for (auto &[root, block] : blocks) {
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long decagon_cyclic_echo_count(unsigned n, EchoConvention c)
{
  if (n < 2)
    throw std::invalid_argument("decagon_cyclic_echo_count: n must be at least 2");
  PrimitiveGraph graph(n);
  graph.add(ResidueMatrix4(builtin_matrix(Builtin::rho_R), n));
  graph.add(ResidueMatrix4(builtin_matrix(Builtin::rho_T), n));
  if (c == EchoConvention::unit_classes)
    for (unsigned u = 2; u < n; ++u)
      if (std::gcd(u, n) == 1)
        graph.add(ResidueMatrix4(IntMatrix4::identity().scaled(u), n));
  return graph.components();
}

namespace {

CyclotomicElement xi_power(long long k) { return CyclotomicElement::zeta_power(2 * k); }

std::array<CyclotomicElement, 4> decagon_basis_periods()
{
  CyclotomicElement a1 = xi_power(1) + CyclotomicElement(1);
  CyclotomicElement b1 = a1.conj();
  CyclotomicElement a2 = xi_power(2) - xi_power(4);
  CyclotomicElement b2 = xi_power(1) - xi_power(3);
  return {a1, b1, a2, b2};
}

} // namespace

CyclotomicElement decagon_period(const Vec4 &x)
{
  static const auto basis = decagon_basis_periods();
  CyclotomicElement p;
  for (int i = 0; i < 4; ++i)
    p = p + basis[i] * Rational(x[i]);
  return p;
}

CyclotomicElement decagon_shear(const CyclotomicElement &p)
{
  static const CyclotomicElement z = CyclotomicElement::zeta_power(1),
                                 zi = CyclotomicElement::zeta_power(-1);
  static const CyclotomicElement cot_factor = (z + zi) / (z - zi);
  return p + (p - p.conj()) * cot_factor;
}

std::size_t rational_rank(const std::vector<CyclotomicElement> &xs)
{
  std::vector<std::array<Rational, CyclotomicElement::degree>> rows;
  for (const auto &x : xs)
    rows.push_back(x.coefficients());
  std::size_t rank = 0;
  for (int col = 0; col < CyclotomicElement::degree && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0)
        continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (int k = col; k < CyclotomicElement::degree; ++k)
        rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool DecagonReport::ok() const
{
  return period_rank == 4 && rho_r5_minus_identity && rho_r10_identity &&
         std::all_of(relations.begin(), relations.end(), [](const Relation &r) { return r.holds; });
}

DecagonReport verify_decagon_periods()
{
  static const char *names[] = {"alpha1", "beta1", "alpha2", "beta2"};
  const IntMatrix4 rr = builtin_matrix(Builtin::rho_R), rt = builtin_matrix(Builtin::rho_T);
  const CyclotomicElement xi = xi_power(1);
  DecagonReport rep;
  for (int j = 0; j < 4; ++j) {
    Vec4 e{};
    e[j] = 1;
    CyclotomicElement p = decagon_period(e);
    rep.relations.push_back({std::string("R ") + names[j], xi * p == decagon_period(rr * e)});
  }
  for (int j = 0; j < 4; ++j) {
    Vec4 e{};
    e[j] = 1;
    CyclotomicElement p = decagon_period(e);
    rep.relations.push_back({std::string("T ") + names[j], decagon_shear(p) == decagon_period(rt * e)});
  }
  std::vector<CyclotomicElement> periods;
  for (int j = 0; j < 4; ++j) {
    Vec4 e{};
    e[j] = 1;
    periods.push_back(decagon_period(e));
  }
  rep.period_rank = rational_rank(periods);
  rep.rho_r5_minus_identity = power(rr, 5) == IntMatrix4::identity().scaled(-1);
  rep.rho_r10_identity = power(rr, 10) == IntMatrix4::identity();
  return rep;
}

unsigned long long euler_phi(unsigned long long n)
{
  unsigned long long r = n;
  for (unsigned long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      r -= r / p;
    }
  if (n > 1)
    r -= r / n;
  return r;
}

namespace {

IntMatrix4 columns(const std::array<Vec4, 4> &u)
{
  IntMatrix4 m;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      m.m[i][j] = u[j][i];
  return m;
}

IntMatrix4 adjugate(const IntMatrix4 &a)
{
  IntMatrix4 adj;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // minor deleting row j, column i, embedded as a 4x4 with unit pivot
      IntMatrix4 minor;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          minor.m[r][c] = (r == j || c == i) ? (r == j && c == i ? 1 : 0) : a.m[r][c];
      adj.m[i][j] = minor.determinant();
    }
  return adj;
}

long long inverse_mod(long long a, long long n)
{
  a = mod_reduce(a, n);
  for (long long x = 1; x < n; ++x)
    if (a * x % n == 1)
      return x;
  throw std::invalid_argument("value is not invertible modulo n");
}

} // namespace

EigenbasisReport eigenbasis_checks(long long b, unsigned n)
{
  EigenbasisReport rep;
  long long r = 0;
  while ((r + 1) * (r + 1) <= b)
    ++r;
  if (r * r != b || r < 2)
    throw std::invalid_argument("eigenbasis_checks: b must be a square greater than 1");
  if (n < 3 || n % 2 == 0 || std::gcd(static_cast<long long>(n), b) != 1)
    throw std::invalid_argument("eigenbasis_checks: n must be odd, at least 3 and coprime to b");
  rep.b = b;
  rep.b_root = r;
  rep.n = n;

  const IntMatrix4 t = builtin_matrix(Builtin::T, b, 0);
  const IntMatrix4 printed = from_rows({{{r, 0, r, 0}, {0, r, 0, r}, {1, 0, -1, 0}, {0, 1, 0, -1}}});
  rep.determinant = printed.determinant();
  rep.determinant_ok = rep.determinant == 4 * b;

  auto eigen_ok = [&](const std::array<Vec4, 4> &u) {
    std::vector<bool> ok;
    for (int j = 0; j < 4; ++j) {
      long long lambda = j < 2 ? r : -r;
      Vec4 tu = t * u[j];
      ok.push_back(tu == Vec4{lambda * u[j][0], lambda * u[j][1], lambda * u[j][2], lambda * u[j][3]});
    }
    return ok;
  };
  rep.printed_eigenvectors =
      eigen_ok({Vec4{r, 0, 1, 0}, Vec4{0, r, 0, 1}, Vec4{r, 0, -1, 0}, Vec4{0, r, 0, -1}});
  const std::array<Vec4, 4> u{Vec4{r, 0, 1, 0}, Vec4{0, 1, 0, r}, Vec4{r, 0, -1, 0}, Vec4{0, 1, 0, -r}};
  rep.eigenvectors = eigen_ok(u);

  const IntMatrix4 umat = columns(u);
  rep.eigenbasis_determinant = umat.determinant();
  const long long det_inv = inverse_mod(rep.eigenbasis_determinant, n);
  const IntMatrix4 uinv = adjugate(umat).scaled(det_inv);
  const ResidueMatrix4 to_u(uinv, n);

  rep.block_diagonal = true;
  std::vector<ResidueMatrix4> hv;
  for (Builtin g : {Builtin::H, Builtin::V}) {
    IntMatrix4 m = builtin_matrix(g, b, 0);
    hv.emplace_back(m, n);
    ResidueMatrix4 conj(uinv * m * umat, n);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if ((i < 2) != (j < 2) && conj(i, j) != 0)
          rep.block_diagonal = false;
  }

  auto minus_class = [&](const HomologyVector &v) {
    HomologyVector w = to_u * v;
    return std::gcd(std::gcd(w.coords[2], w.coords[3]), n);
  };
  std::unordered_set<unsigned> family, all;
  for (unsigned x = 0; x < n; ++x) {
    Vec4 w = umat * Vec4{1, 0, static_cast<long long>(x), 0};
    HomologyVector v(w, n);
    if (v.is_primitive())
      family.insert(minus_class(v));
  }
  PrimitiveGraph graph(n);
  for (unsigned label = 0; label < graph.primitive.size(); ++label)
    if (graph.primitive[label])
      all.insert(minus_class(HomologyVector::from_label(label, n)));
  for (const auto &g : hv)
    graph.add(g);
  rep.family_classes = family.size();
  rep.all_classes = all.size();
  rep.hv_orbits = graph.components();
  rep.phi = euler_phi(n);
  return rep;
}

} // namespace echoes
