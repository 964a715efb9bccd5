#include "echoes/covers.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace echoes {

namespace {

unsigned residue(long long x, unsigned n)
{
  long long r = x % static_cast<long long>(n);
  return static_cast<unsigned>(r < 0 ? r + n : r);
}

// Pairings <c_k, basis_j> of fundamental cycles with basis cycles.
struct DualTable {
  CycleSystem cs;
  std::vector<std::vector<long long>> pair; // [k][j]
  std::vector<std::pair<Point, Move>> edge; // cotree edge of cycle k

  DualTable(const Origami &o, const SymplecticBasis &basis) : cs(o)
  {
    if (basis.genus() == 0)
      throw std::invalid_argument("empty symplectic basis");
    std::vector<std::vector<long long>> coords;
    for (const auto &c : basis.cycles)
      coords.push_back(cs.coordinates(c));
    pair.assign(cs.rank(), std::vector<long long>(coords.size(), 0));
    std::vector<long long> unit(cs.rank(), 0);
    for (std::size_t k = 0; k < cs.rank(); ++k) {
      unit[k] = 1;
      for (std::size_t j = 0; j < coords.size(); ++j)
        pair[k][j] = cs.pairing(unit, coords[j]);
      unit[k] = 0;
    }
    edge.resize(cs.rank());
    for (Point s = 0; s < o.size(); ++s)
      for (Move m : {Move::east, Move::north}) {
        long long k = cs.cotree_index(s, m);
        if (k >= 0)
          edge[k] = {s, m};
      }
  }

  CyclicCover cover(const std::vector<long long> &gamma, unsigned n) const
  {
    const Origami &o = cs.origami();
    if (gamma.size() != pair.front().size())
      throw std::invalid_argument("dual class has the wrong length");
    CyclicCover c{o, n, std::vector<unsigned>(o.size(), 0), std::vector<unsigned>(o.size(), 0)};
    for (std::size_t k = 0; k < pair.size(); ++k) {
      long long w = 0;
      for (std::size_t j = 0; j < gamma.size(); ++j)
        w += gamma[j] * pair[k][j];
      auto [s, m] = edge[k];
      (m == Move::east ? c.w_right : c.w_up)[s] = residue(w, n);
    }
    return c;
  }
};

void require_genus_two(const Origami &o)
{
  if (stratum(o).genus != 2)
    throw std::invalid_argument("covers: base origami must have genus 2");
}

} // namespace

unsigned holonomy(const CyclicCover &c, const TaxiPath &p)
{
  const Origami &o = c.base;
  if (!is_closed(o, p))
    throw std::invalid_argument("holonomy: path is not closed");
  long long t = 0;
  Point s = p.start;
  for (Move m : p.moves) {
    switch (m) {
    case Move::east:
      t += c.w_right[s];
      break;
    case Move::west:
      t -= c.w_right[o.h_inv()(s)];
      break;
    case Move::north:
      t += c.w_up[s];
      break;
    case Move::south:
      t -= c.w_up[o.v_inv()(s)];
      break;
    }
    s = step(o, s, m);
  }
  return residue(t, c.modulus);
}

unsigned holonomy(const CyclicCover &c, const HomologyCycle &cycle)
{
  long long t = 0;
  for (const auto &[k, p] : cycle.terms)
    t += k * static_cast<long long>(holonomy(c, p));
  return residue(t, c.modulus);
}

std::vector<unsigned> holonomy_signature(const CyclicCover &c)
{
  CycleSystem cs(c.base);
  std::vector<unsigned> sig;
  for (const auto &p : cs.cycles())
    sig.push_back(holonomy(c, p));
  return sig;
}

CyclicCover cover_from_dual(const Origami &o, const SymplecticBasis &basis,
                            const std::vector<long long> &gamma, unsigned n)
{
  if (n < 2)
    throw std::invalid_argument("cover modulus must be at least 2");
  return DualTable(o, basis).cover(gamma, n);
}

std::vector<DoubleCover> double_covers(const Origami &o, const SymplecticBasis &basis)
{
  return cyclic_covers(o, basis, 2);
}

std::vector<DoubleCover> all_double_covers(const Origami &o)
{
  require_genus_two(o);
  return double_covers(o, symplectic_basis(o));
}

std::vector<CyclicCover> cyclic_covers(const Origami &o, const SymplecticBasis &basis, unsigned n)
{
  if (n < 2)
    throw std::invalid_argument("cyclic_covers: modulus must be at least 2");
  require_genus_two(o);
  if (basis.genus() != 2)
    throw std::invalid_argument("cyclic_covers: basis must have four cycles");
  DualTable table(o, basis);
  std::vector<CyclicCover> out;
  const unsigned total = n * n * n * n;
  for (unsigned label = 1; label < total; ++label) {
    std::vector<long long> gamma(4);
    unsigned g = n, rest = label;
    for (int i = 0; i < 4; ++i) {
      gamma[i] = rest % n;
      rest /= n;
      g = std::gcd(g, static_cast<unsigned>(gamma[i]));
    }
    if (g != 1)
      continue;
    out.push_back(table.cover(gamma, n));
  }
  return out;
}

std::vector<CyclicCover> cyclic_covers(const Origami &o, unsigned n)
{
  require_genus_two(o);
  return cyclic_covers(o, symplectic_basis(o), n);
}

Origami lift(const CyclicCover &c)
{
  const std::size_t n = c.base.size();
  const unsigned k = c.modulus;
  std::vector<Point> h(n * k), v(n * k);
  for (unsigned t = 0; t < k; ++t)
    for (Point s = 0; s < n; ++s) {
      h[s + n * t] = static_cast<Point>(c.base.h()(s) + n * ((t + c.w_right[s]) % k));
      v[s + n * t] = static_cast<Point>(c.base.v()(s) + n * ((t + c.w_up[s]) % k));
    }
  Permutation hp(std::move(h)), vp(std::move(v));
  std::vector<Permutation> gens{hp, vp};
  if (!is_transitive(gens, n * k))
    throw std::invalid_argument("lift: cover is disconnected");
  return Origami(std::move(hp), std::move(vp));
}

Permutation deck_shift(const CyclicCover &c)
{
  const std::size_t n = c.base.size();
  std::vector<Point> im(n * c.modulus);
  for (std::size_t x = 0; x < im.size(); ++x)
    im[x] = static_cast<Point>((x + n) % im.size());
  return Permutation(std::move(im));
}

CoverLabel cover_label(const Origami &o, const SymplecticBasis &basis, const CyclicCover &c)
{
  if (!(o == c.base))
    throw std::invalid_argument("cover_label: cover is over a different origami");
  if (basis.genus() != 2)
    throw std::invalid_argument("cover_label: basis must have four cycles");
  const unsigned n = c.modulus;
  Vec4 x{-static_cast<long long>(holonomy(c, basis.cycles[1])),
         static_cast<long long>(holonomy(c, basis.cycles[0])),
         -static_cast<long long>(holonomy(c, basis.cycles[3])),
         static_cast<long long>(holonomy(c, basis.cycles[2]))};
  CoverLabel r{HomologyVector(x, n), 0};
  r.label = r.gamma.label();
  return r;
}

std::string to_text(const CyclicCover &c, const SymplecticBasis &basis)
{
  CoverLabel l = cover_label(c.base, basis, c);
  std::ostringstream os;
  os << to_text(c.base);
  if (c.modulus == 2) {
    os << " label=" << l.label;
  } else {
    os << " n=" << c.modulus << " dual=";
    for (int i = 0; i < 4; ++i)
      os << (i ? "," : "") << l.gamma.coords[i];
  }
  return os.str();
}

} // namespace echoes
