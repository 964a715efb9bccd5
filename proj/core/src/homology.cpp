#include "echoes/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace echoes {

Move opposite(Move m)
{
  return static_cast<Move>((static_cast<int>(m) + 2) % 4);
}

Point step(const Origami &o, Point s, Move m)
{
  switch (m) {
  case Move::east:
    return o.h()(s);
  case Move::north:
    return o.v()(s);
  case Move::west:
    return o.h_inv()(s);
  case Move::south:
    return o.v_inv()(s);
  }
  return s;
}

Point endpoint(const Origami &o, const TaxiPath &p)
{
  if (p.start >= o.size())
    throw std::invalid_argument("taxi path starts outside the origami");
  Point x = p.start;
  for (Move m : p.moves)
    x = step(o, x, m);
  return x;
}

bool is_closed(const Origami &o, const TaxiPath &p)
{
  return endpoint(o, p) == p.start;
}

Vec2 displacement(const TaxiPath &p)
{
  static constexpr long long dx[] = {1, 0, -1, 0};
  static constexpr long long dy[] = {0, 1, 0, -1};
  Vec2 r{0, 0};
  for (Move m : p.moves) {
    r[0] += dx[static_cast<int>(m)];
    r[1] += dy[static_cast<int>(m)];
  }
  return r;
}

int winding_index(const Origami &o, const TaxiPath &p)
{
  if (p.moves.empty() || !is_closed(o, p))
    throw std::invalid_argument("winding_index: path is not closed");
  long long turns = 0;
  const std::size_t k = p.moves.size();
  for (std::size_t i = 0; i < k; ++i) {
    int diff = (static_cast<int>(p.moves[(i + 1) % k]) - static_cast<int>(p.moves[i]) + 4) % 4;
    if (diff == 1)
      ++turns;
    else if (diff == 3)
      --turns;
    else if (diff == 2)
      throw std::invalid_argument("winding_index: path backtracks");
  }
  if (turns % 4)
    throw std::logic_error("winding_index: turning is not a multiple of a full turn");
  return static_cast<int>(turns / 4);
}

namespace {

// Crossings of the dual path a with vertical edges (left side of s) and
// horizontal edges (bottom of s), and traversals of b pushed to the lower left
// onto the same edges.
struct EdgeCounts {
  std::vector<long long> vert, horiz;
  explicit EdgeCounts(std::size_t n) : vert(n, 0), horiz(n, 0) {}
};

void add_crossings(const Origami &o, const TaxiPath &p, long long k, EdgeCounts &c)
{
  Point x = p.start;
  for (Move m : p.moves) {
    switch (m) {
    case Move::east:
      c.vert[o.h()(x)] += k;
      break;
    case Move::west:
      c.vert[x] -= k;
      break;
    case Move::north:
      c.horiz[o.v()(x)] += k;
      break;
    case Move::south:
      c.horiz[x] -= k;
      break;
    }
    x = step(o, x, m);
  }
}

void add_traversals(const Origami &o, const TaxiPath &p, long long k, EdgeCounts &c)
{
  Point x = p.start;
  for (Move m : p.moves) {
    switch (m) {
    case Move::north:
      c.vert[x] += k;
      break;
    case Move::south:
      c.vert[o.v_inv()(x)] -= k;
      break;
    case Move::east:
      c.horiz[x] += k;
      break;
    case Move::west:
      c.horiz[o.h_inv()(x)] -= k;
      break;
    }
    x = step(o, x, m);
  }
}

long long pair_counts(const EdgeCounts &a, const EdgeCounts &b)
{
  long long r = 0;
  for (std::size_t s = 0; s < a.vert.size(); ++s)
    r += a.vert[s] * b.vert[s] - a.horiz[s] * b.horiz[s];
  return r;
}

void require_closed(const Origami &o, const TaxiPath &p)
{
  if (!is_closed(o, p))
    throw std::invalid_argument("intersection: path is not closed");
}

} // namespace

long long intersection(const Origami &o, const TaxiPath &a, const TaxiPath &b)
{
  require_closed(o, a);
  require_closed(o, b);
  EdgeCounts ca(o.size()), cb(o.size());
  add_crossings(o, a, 1, ca);
  add_traversals(o, b, 1, cb);
  return pair_counts(ca, cb);
}

HomologyCycle &HomologyCycle::add(long long k, const HomologyCycle &c)
{
  if (k == 0)
    return *this;
  for (const auto &[coef, path] : c.terms)
    terms.emplace_back(k * coef, path);
  return *this;
}

long long intersection(const Origami &o, const HomologyCycle &a, const HomologyCycle &b)
{
  EdgeCounts ca(o.size()), cb(o.size());
  for (const auto &[k, p] : a.terms) {
    require_closed(o, p);
    add_crossings(o, p, k, ca);
  }
  for (const auto &[k, p] : b.terms) {
    require_closed(o, p);
    add_traversals(o, p, k, cb);
  }
  return pair_counts(ca, cb);
}

Vec2 period(const HomologyCycle &c)
{
  Vec2 r{0, 0};
  for (const auto &[k, p] : c.terms) {
    Vec2 d = displacement(p);
    r[0] += k * d[0];
    r[1] += k * d[1];
  }
  return r;
}

CycleSystem::CycleSystem(const Origami &o, Point root)
    : o_(o), corner_(o.size(), Vec2{0, 0}), east_index_(o.size(), -1),
      north_index_(o.size(), -1)
{
  const std::size_t n = o.size();
  if (root >= n)
    throw std::invalid_argument("CycleSystem: root outside the origami");

  static constexpr long long dx[] = {1, 0, -1, 0};
  static constexpr long long dy[] = {0, 1, 0, -1};

  // parent move into each square; tree edges marked per (square, E/N).
  std::vector<long long> parent(n, -1);
  std::vector<Move> parent_move(n, Move::east);
  std::vector<std::size_t> depth(n, 0);
  std::vector<char> tree_east(n, 0), tree_north(n, 0), seen(n, 0);
  std::deque<Point> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (int mi = 0; mi < 4; ++mi) {
      Move m = static_cast<Move>(mi);
      Point y = step(o, x, m);
      if (seen[y])
        continue;
      seen[y] = 1;
      parent[y] = x;
      parent_move[y] = m;
      depth[y] = depth[x] + 1;
      corner_[y] = {corner_[x][0] + dx[mi], corner_[x][1] + dy[mi]};
      switch (m) {
      case Move::east:
        tree_east[x] = 1;
        break;
      case Move::north:
        tree_north[x] = 1;
        break;
      case Move::west:
        tree_east[y] = 1;
        break;
      case Move::south:
        tree_north[y] = 1;
        break;
      }
      queue.push_back(y);
    }
  }

  // moves from the ancestor at depth `stop` down to x.
  auto down_path = [&](Point x, Point anc) {
    std::vector<Move> mv;
    while (x != anc) {
      mv.push_back(parent_move[x]);
      x = static_cast<Point>(parent[x]);
    }
    std::reverse(mv.begin(), mv.end());
    return mv;
  };
  auto lca = [&](Point a, Point b) {
    while (depth[a] > depth[b])
      a = static_cast<Point>(parent[a]);
    while (depth[b] > depth[a])
      b = static_cast<Point>(parent[b]);
    while (a != b) {
      a = static_cast<Point>(parent[a]);
      b = static_cast<Point>(parent[b]);
    }
    return a;
  };

  auto add_cycle = [&](Point s, Move m) {
    Point t = step(o, s, m);
    Point c = lca(s, t);
    TaxiPath p;
    p.start = c;
    p.moves = down_path(s, c);
    p.moves.push_back(m);
    std::vector<Move> back = down_path(t, c);
    for (auto it = back.rbegin(); it != back.rend(); ++it)
      p.moves.push_back(opposite(*it));
    cycles_.push_back(std::move(p));
  };

  for (Point s = 0; s < n; ++s) {
    if (!tree_east[s]) {
      east_index_[s] = static_cast<long long>(cycles_.size());
      add_cycle(s, Move::east);
    }
    if (!tree_north[s]) {
      north_index_[s] = static_cast<long long>(cycles_.size());
      add_cycle(s, Move::north);
    }
  }

  const std::size_t m = cycles_.size();
  std::vector<EdgeCounts> cross, trav;
  cross.reserve(m);
  trav.reserve(m);
  for (const auto &p : cycles_) {
    cross.emplace_back(n);
    trav.emplace_back(n);
    add_crossings(o, p, 1, cross.back());
    add_traversals(o, p, 1, trav.back());
  }
  omega_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      omega_[i * m + j] = pair_counts(cross[i], trav[j]);
  spin_.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    spin_[i] = ((winding_index(o, cycles_[i]) + 1) % 2 + 2) % 2;
}

long long CycleSystem::cotree_index(Point s, Move m) const
{
  if (m == Move::east)
    return east_index_[s];
  if (m == Move::north)
    return north_index_[s];
  throw std::invalid_argument("cotree_index: edges are indexed by east or north moves");
}

std::vector<long long> CycleSystem::coordinates(const TaxiPath &p) const
{
  if (!is_closed(o_, p))
    throw std::invalid_argument("coordinates: path is not closed");
  std::vector<long long> x(rank(), 0);
  Point s = p.start;
  for (Move m : p.moves) {
    long long idx = -1, sign = 1;
    switch (m) {
    case Move::east:
      idx = east_index_[s];
      break;
    case Move::north:
      idx = north_index_[s];
      break;
    case Move::west:
      idx = east_index_[o_.h_inv()(s)];
      sign = -1;
      break;
    case Move::south:
      idx = north_index_[o_.v_inv()(s)];
      sign = -1;
      break;
    }
    if (idx >= 0)
      x[idx] += sign;
    s = step(o_, s, m);
  }
  return x;
}

std::vector<long long> CycleSystem::coordinates(const HomologyCycle &c) const
{
  std::vector<long long> x(rank(), 0);
  for (const auto &[k, p] : c.terms) {
    auto y = coordinates(p);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] += k * y[i];
  }
  return x;
}

long long CycleSystem::pairing(const std::vector<long long> &x,
                               const std::vector<long long> &y) const
{
  const std::size_t m = rank();
  long long r = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!x[i])
      continue;
    long long row = 0;
    for (std::size_t j = 0; j < m; ++j)
      row += omega_[i * m + j] * y[j];
    r += x[i] * row;
  }
  return r;
}

int CycleSystem::quadratic_form(const std::vector<long long> &x) const
{
  const std::size_t m = rank();
  long long q = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(x[i] & 1))
      continue;
    q += spin_[i];
    for (std::size_t j = i + 1; j < m; ++j)
      if (x[j] & 1)
        q += omega_[i * m + j];
  }
  return static_cast<int>(((q % 2) + 2) % 2);
}

HomologyCycle CycleSystem::realize(const std::vector<long long> &x) const
{
  HomologyCycle c;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i])
      c.terms.emplace_back(x[i], cycles_[i]);
  return c;
}

SymplecticBasis symplectic_basis(const Origami &o, Point root)
{
  CycleSystem cs(o, root);
  const std::size_t m = cs.rank();
  std::vector<std::vector<long long>> g(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    g[i][i] = 1;
  std::vector<std::size_t> active(m);
  std::iota(active.begin(), active.end(), std::size_t{0});

  auto axpy = [](std::vector<long long> &y, long long k, const std::vector<long long> &x) {
    for (std::size_t t = 0; t < y.size(); ++t)
      y[t] += k * x[t];
  };

  SymplecticBasis basis;
  for (;;) {
    long long best = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t u = 0; u < active.size(); ++u)
      for (std::size_t w = u + 1; w < active.size(); ++w) {
        long long p = cs.pairing(g[active[u]], g[active[w]]);
        if (p != 0 && (best == 0 || std::llabs(p) < std::llabs(best))) {
          best = p;
          bi = active[u];
          bj = active[w];
        }
      }
    if (best == 0)
      break;
    bool changed = false;
    for (std::size_t k : active) {
      if (k == bi || k == bj)
        continue;
      long long q1 = cs.pairing(g[bi], g[k]) / best;
      if (q1)
        axpy(g[k], -q1, g[bj]);
      long long q2 = cs.pairing(g[bj], g[k]) / best;
      if (q2)
        axpy(g[k], q2, g[bi]);
      if (cs.pairing(g[bi], g[k]) != 0 || cs.pairing(g[bj], g[k]) != 0)
        changed = true;
    }
    if (changed)
      continue;
    if (std::llabs(best) != 1)
      throw std::logic_error("symplectic_basis: intersection form is not unimodular");
    std::size_t a = best == 1 ? bi : bj, b = best == 1 ? bj : bi;
    basis.cycles.push_back(cs.realize(g[a]));
    basis.cycles.push_back(cs.realize(g[b]));
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](std::size_t k) { return k == bi || k == bj; }),
                 active.end());
  }
  if (2 * static_cast<long long>(basis.genus()) != 2 * stratum(o).genus)
    throw std::logic_error("symplectic_basis: rank does not match the genus");
  return basis;
}

std::vector<long long> basis_coordinates(const Origami &o, const SymplecticBasis &basis,
                                         const HomologyCycle &c)
{
  std::vector<long long> x;
  for (std::size_t i = 0; i < basis.genus(); ++i) {
    x.push_back(intersection(o, c, basis.cycles[2 * i + 1]));
    x.push_back(intersection(o, basis.cycles[2 * i], c));
  }
  return x;
}

int quadratic_form(const Origami &o, const HomologyCycle &c)
{
  CycleSystem cs(o);
  return cs.quadratic_form(cs.coordinates(c));
}

namespace {

void require_even_zeros(const Origami &o)
{
  for (int k : stratum(o).zero_orders)
    if (k % 2)
      throw std::invalid_argument("arf_invariant: stratum has a zero of odd order");
}

} // namespace

int arf_invariant(const Origami &o, const SymplecticBasis &basis)
{
  require_even_zeros(o);
  CycleSystem cs(o);
  int arf = 0;
  for (std::size_t i = 0; i < basis.genus(); ++i)
    arf += cs.quadratic_form(cs.coordinates(basis.cycles[2 * i])) *
           cs.quadratic_form(cs.coordinates(basis.cycles[2 * i + 1]));
  return arf % 2;
}

int arf_invariant(const Origami &o)
{
  int first = arf_invariant(o, symplectic_basis(o, 0));
  int second = arf_invariant(o, symplectic_basis(o, static_cast<Point>(o.size() - 1)));
  if (first != second)
    throw std::logic_error("arf_invariant: depends on the basis");
  return first;
}

namespace {

long long ext_gcd(long long a, long long b, long long &x, long long &y)
{
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

} // namespace

PeriodLattice hermite_lattice(const std::vector<Vec2> &generators)
{
  Vec2 acc{0, 0};
  long long ax = 0;
  for (const Vec2 &g : generators) {
    if (g[1] == 0) {
      ax = std::gcd(ax, g[0]);
      continue;
    }
    if (acc[1] == 0) {
      ax = std::gcd(ax, acc[0]);
      acc = g;
      continue;
    }
    long long p, q;
    long long r = ext_gcd(acc[1], g[1], p, q);
    Vec2 merged{p * acc[0] + q * g[0], r};
    long long u = g[1] / r, w = acc[1] / r;
    ax = std::gcd(ax, u * acc[0] - w * g[0]);
    acc = merged;
  }
  PeriodLattice lat;
  if (acc[1] < 0)
    acc = {-acc[0], -acc[1]};
  lat.a = std::llabs(ax);
  lat.d = acc[1];
  lat.b = lat.a ? ((acc[0] % lat.a) + lat.a) % lat.a : acc[0];
  return lat;
}

PeriodLattice absolute_period_lattice(const Origami &o)
{
  CycleSystem cs(o);
  std::vector<Vec2> gens;
  for (const auto &p : cs.cycles())
    gens.push_back(displacement(p));
  return hermite_lattice(gens);
}

PeriodLattice relative_period_lattice(const Origami &o)
{
  CycleSystem cs(o);
  std::vector<Vec2> gens;
  for (const auto &p : cs.cycles())
    gens.push_back(displacement(p));
  std::vector<Vec2> zeros;
  for (const auto &cls : vertex_classes(o))
    if (cls.size() >= 2)
      zeros.push_back(cs.corner_displacement(*std::min_element(cls.begin(), cls.end())));
  for (std::size_t i = 1; i < zeros.size(); ++i)
    gens.push_back({zeros[i][0] - zeros[0][0], zeros[i][1] - zeros[0][1]});
  return hermite_lattice(gens);
}

bool is_reduced(const Origami &o)
{
  return relative_period_lattice(o).is_full();
}

SymplecticBasis l_origami_basis(long long b, long long e)
{
  LParameters p = l_parameters(b, e);
  const Point w = static_cast<Point>(p.row());
  TaxiPath a1{w, {Move::east}};
  TaxiPath a2{0, std::vector<Move>(w, Move::east)};
  TaxiPath b2{1, {Move::north}};
  TaxiPath column{0, std::vector<Move>(static_cast<std::size_t>(p.lambda) + 1, Move::north)};
  SymplecticBasis basis;
  basis.cycles = {HomologyCycle(a1), HomologyCycle(column) - HomologyCycle(b2),
                  HomologyCycle(a2), HomologyCycle(b2)};
  return basis;
}

} // namespace echoes
