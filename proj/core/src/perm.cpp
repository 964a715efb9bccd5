#include "echoes/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace echoes {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  if (images_.empty())
    throw std::invalid_argument("permutation of degree 0");
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<char> seen(images_.size(), 0);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> c;
    for (Point x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    res.push_back(std::move(c));
  }
  return res;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> t;
  for (const auto &c : cycles())
    t.push_back(c.size());
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::size_t Permutation::order() const
{
  std::size_t o = 1;
  for (std::size_t len : cycle_type())
    o = std::lcm(o, len);
  return o;
}

Permutation compose(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: permutations of different degree");
  std::vector<Point> im(p.degree());
  for (Point x = 0; x < im.size(); ++x)
    im[x] = p(q(x));
  return Permutation(std::move(im));
}

Permutation commutator(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("commutator: permutations of different degree");
  return compose(p, compose(q, compose(p.inverse(), q.inverse())));
}

Permutation conjugate(const Permutation &p, const Permutation &g)
{
  return compose(g, compose(p, g.inverse()));
}

Permutation power(const Permutation &p, long long k)
{
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Permutation res = Permutation::identity(p.degree());
  while (e) {
    if (e & 1)
      res = compose(base, res);
    base = compose(base, base);
    e >>= 1;
  }
  return res;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t n)
{
  if (n == 0)
    return false;
  for (const auto &g : gens)
    if (g.degree() != n)
      throw std::invalid_argument("is_transitive: generator degree mismatch");
  std::vector<Permutation> inv;
  for (const auto &g : gens)
    inv.push_back(g.inverse());
  std::vector<char> seen(n, 0);
  std::vector<Point> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Point y : {gens[i](x), inv[i](x)}) {
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
  }
  return count == n;
}

Permutation parse_cycles(std::string_view text, std::size_t n)
{
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<char> used(n, 0);

  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("malformed cycle text \"" + std::string(text) +
                                "\": " + why);
  };

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a positive integer");
      unsigned long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > n)
          fail("index out of range");
        ++i;
      }
      if (v == 0)
        fail("index out of range");
      Point x = static_cast<Point>(v - 1);
      if (used[x])
        fail("repeated element");
      used[x] = 1;
      cyc.push_back(x);
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i;
    }
    if (cyc.empty())
      fail("empty cycle");
    for (std::size_t k = 0; k < cyc.size(); ++k)
      im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

std::string format_cycles(const Permutation &p)
{
  std::ostringstream os;
  for (const auto &c : p.cycles()) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        os << ',';
      os << c[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images())
    h = (h ^ x) * 1099511628211ull;
  return h;
}

} // namespace echoes
