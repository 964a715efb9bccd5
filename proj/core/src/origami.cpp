#include "echoes/origami.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace echoes {

Origami::Origami(Permutation h, Permutation v)
    : h_(std::move(h)), v_(std::move(v))
{
  if (h_.degree() != v_.degree())
    throw std::invalid_argument("origami: h and v have different degree");
  if (h_.degree() == 0)
    throw std::invalid_argument("origami: no squares");
  const Permutation gens[] = {h_, v_};
  if (!is_transitive(gens, h_.degree()))
    throw std::invalid_argument("origami: <h, v> is not transitive");
  hi_ = h_.inverse();
  vi_ = v_.inverse();
}

std::string Stratum::to_string() const
{
  if (zero_orders.empty())
    return "torus";
  std::ostringstream os;
  os << "H(";
  for (std::size_t i = 0; i < zero_orders.size(); ++i)
    os << (i ? "," : "") << zero_orders[i];
  os << ')';
  return os.str();
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode &c) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : c)
    h = (h ^ x) * 1099511628211ull;
  return h;
}

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

class Relabeller {
public:
  explicit Relabeller(const Origami &o)
      : o_(o), label_(o.size()), order_(o.size()), code_(2 * o.size())
  {
  }

  // Returns true if the relabelling from `start` beats `best` (or best is
  // empty); code() then holds it.
  bool run(Point start, const CanonicalCode &best)
  {
    const std::size_t n = o_.size();
    std::fill(label_.begin(), label_.end(), kUnset);
    std::size_t head = 0, tail = 0;
    std::uint32_t next = 0;
    auto visit = [&](Point y) {
      if (label_[y] == kUnset) {
        label_[y] = next++;
        order_[tail++] = y;
      }
    };
    visit(start);
    bool deciding = !best.empty();
    while (head < tail) {
      Point x = order_[head];
      visit(o_.h()(x));
      visit(o_.v()(x));
      std::uint32_t hx = label_[o_.h()(x)], vx = label_[o_.v()(x)];
      code_[2 * head] = hx;
      code_[2 * head + 1] = vx;
      if (deciding) {
        if (hx != best[2 * head]) {
          if (hx > best[2 * head])
            return false;
          deciding = false;
        } else if (vx != best[2 * head + 1]) {
          if (vx > best[2 * head + 1])
            return false;
          deciding = false;
        }
      }
      visit(o_.h_inv()(x));
      visit(o_.v_inv()(x));
      ++head;
    }
    // Equal to best counts as not better.
    return !deciding && tail == n;
  }

  const CanonicalCode &code() const { return code_; }

private:
  const Origami &o_;
  std::vector<std::uint32_t> label_;
  std::vector<Point> order_;
  CanonicalCode code_;
};

} // namespace

CanonicalCode canonical_form(const Origami &o)
{
  Relabeller r(o);
  CanonicalCode best;
  for (Point s = 0; s < o.size(); ++s)
    if (r.run(s, best))
      best = r.code();
  return best;
}

Origami from_canonical(const CanonicalCode &code)
{
  if (code.empty() || code.size() % 2)
    throw std::invalid_argument("from_canonical: malformed code");
  std::size_t n = code.size() / 2;
  std::vector<Point> h(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = code[2 * i];
    v[i] = code[2 * i + 1];
  }
  return Origami(Permutation(std::move(h)), Permutation(std::move(v)));
}

bool isomorphic(const Origami &a, const Origami &b)
{
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

Stratum stratum(const Origami &o)
{
  Stratum s;
  int total = 0;
  for (std::size_t len : commutator(o.h(), o.v()).cycle_type()) {
    s.zero_orders.push_back(static_cast<int>(len) - 1);
    total += static_cast<int>(len) - 1;
  }
  s.genus = (total + 2) / 2;
  return s;
}

std::vector<std::vector<Point>> vertex_classes(const Origami &o)
{
  Permutation sigma = compose(o.v(), compose(o.h(), compose(o.v_inv(), o.h_inv())));
  std::vector<std::vector<Point>> res;
  std::vector<char> seen(o.size(), 0);
  for (Point s = 0; s < o.size(); ++s) {
    if (seen[s])
      continue;
    std::vector<Point> c;
    for (Point x = s; !seen[x]; x = sigma(x)) {
      seen[x] = 1;
      c.push_back(x);
    }
    res.push_back(std::move(c));
  }
  return res;
}

Origami act_generator(const Origami &o, Generator g)
{
  // Moving right on L.o is moving right then down on o; moving up on R.o is
  // moving up then left on o.
  switch (g) {
  case Generator::L:
    return Origami(compose(o.v_inv(), o.h()), o.v());
  case Generator::L_inv:
    return Origami(compose(o.v(), o.h()), o.v());
  case Generator::R:
    return Origami(o.h(), compose(o.h_inv(), o.v()));
  case Generator::R_inv:
    return Origami(o.h(), compose(o.h(), o.v()));
  case Generator::minus_identity:
    return Origami(o.h_inv(), o.v_inv());
  }
  throw std::logic_error("act_generator: bad generator");
}

Matrix2 generator_matrix(Generator g)
{
  switch (g) {
  case Generator::L:
    return {1, 0, 1, 1};
  case Generator::L_inv:
    return {1, 0, -1, 1};
  case Generator::R:
    return {1, 1, 0, 1};
  case Generator::R_inv:
    return {1, -1, 0, 1};
  case Generator::minus_identity:
    return {-1, 0, 0, -1};
  }
  throw std::logic_error("generator_matrix: bad generator");
}

namespace {

Generator inverse_of(Generator g)
{
  switch (g) {
  case Generator::L:
    return Generator::L_inv;
  case Generator::L_inv:
    return Generator::L;
  case Generator::R:
    return Generator::R_inv;
  case Generator::R_inv:
    return Generator::R;
  case Generator::minus_identity:
    return Generator::minus_identity;
  }
  return g;
}

void check_det(const Matrix2 &m)
{
  if (m.det() != 1)
    throw std::invalid_argument("matrix does not have determinant 1");
}

} // namespace

std::vector<Generator> sl2z_word(const Matrix2 &m)
{
  check_det(m);
  // Reduce N = G_k ... G_1 M to upper triangular form.
  std::vector<Generator> ops;
  Matrix2 n = m;
  auto apply = [&](Generator g, long long times) {
    for (long long i = 0; i < times; ++i) {
      ops.push_back(g);
      n = generator_matrix(g) * n;
    }
  };
  while (n.c != 0) {
    if (n.a == 0) {
      apply(Generator::R, 1);
      apply(Generator::L_inv, 1);
    } else if (std::llabs(n.a) >= std::llabs(n.c)) {
      long long q = n.a / n.c;
      apply(q > 0 ? Generator::R_inv : Generator::R, std::llabs(q));
    } else {
      long long q = n.c / n.a;
      apply(q > 0 ? Generator::L_inv : Generator::L, std::llabs(q));
    }
  }
  // n = a I * R^(a b), a = +-1.
  std::vector<Generator> word;
  for (Generator g : ops)
    word.push_back(inverse_of(g));
  if (n.a == -1)
    word.push_back(Generator::minus_identity);
  long long t = n.a * n.b;
  for (long long i = 0; i < std::llabs(t); ++i)
    word.push_back(t > 0 ? Generator::R : Generator::R_inv);
  return word;
}

Origami act_matrix(const Origami &o, const Matrix2 &m)
{
  std::vector<Generator> word = sl2z_word(m);
  Origami res = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    res = act_generator(res, *it);
  return res;
}

bool veech_contains(const Origami &o, const Matrix2 &m)
{
  return canonical_form(act_matrix(o, m)) == canonical_form(o);
}

OrbitCapExceeded::OrbitCapExceeded(std::size_t partial, std::size_t cap)
    : std::runtime_error("orbit size cap " + std::to_string(cap) +
                         " exceeded after " + std::to_string(partial) +
                         " canonical forms"),
      partial_(partial)
{
}

std::optional<std::size_t> OrbitReport::index_of(const CanonicalCode &c) const
{
  auto it = std::lower_bound(representatives.begin(), representatives.end(), c);
  if (it == representatives.end() || *it != c)
    return std::nullopt;
  return static_cast<std::size_t>(it - representatives.begin());
}

OrbitReport sl2z_orbit(const Origami &o, const OrbitOptions &opts)
{
  static constexpr Generator gens[] = {Generator::L, Generator::R, Generator::L_inv,
                                       Generator::R_inv};
  std::unordered_map<CanonicalCode, std::uint32_t, CanonicalCodeHash> index;
  std::vector<CanonicalCode> codes;
  std::vector<std::array<std::uint32_t, 4>> edges;

  auto add = [&](CanonicalCode c) -> std::pair<std::uint32_t, bool> {
    auto [it, inserted] = index.try_emplace(std::move(c), codes.size());
    if (inserted) {
      if (codes.size() >= opts.cap)
        throw OrbitCapExceeded(codes.size(), opts.cap);
      codes.push_back(it->first);
      edges.push_back({});
    }
    return {it->second, inserted};
  };

  std::deque<Origami> queue;
  add(canonical_form(o));
  queue.push_back(from_canonical(codes[0]));
  std::uint32_t cur = 0;
  while (!queue.empty()) {
    Origami x = std::move(queue.front());
    queue.pop_front();
    for (int g = 0; g < 4; ++g) {
      Origami y = act_generator(x, gens[g]);
      auto [id, fresh] = add(canonical_form(y));
      edges[cur][g] = id;
      if (fresh)
        queue.push_back(from_canonical(codes[id]));
    }
    ++cur;
  }

  std::vector<std::uint32_t> perm(codes.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(),
            [&](std::uint32_t a, std::uint32_t b) { return codes[a] < codes[b]; });
  std::vector<std::uint32_t> rank(codes.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i)
    rank[perm[i]] = i;

  OrbitReport rep;
  rep.size = codes.size();
  rep.representatives.reserve(codes.size());
  for (auto i : perm)
    rep.representatives.push_back(std::move(codes[i]));
  if (opts.record_edges) {
    std::vector<std::array<std::uint32_t, 4>> sorted(edges.size());
    for (std::uint32_t i = 0; i < edges.size(); ++i)
      for (int g = 0; g < 4; ++g)
        sorted[rank[i]][g] = rank[edges[i][g]];
    rep.generator_edges = std::move(sorted);
  }
  return rep;
}

std::vector<Permutation> translations(const Origami &o)
{
  const std::size_t n = o.size();
  std::vector<Permutation> res;
  std::vector<Point> t(n);
  std::vector<char> set(n);
  std::vector<Point> stack;
  for (Point j = 0; j < n; ++j) {
    std::fill(set.begin(), set.end(), 0);
    t[0] = j;
    set[0] = 1;
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      const std::pair<const Permutation *, Point> steps[] = {
          {&o.h(), o.h()(x)}, {&o.v(), o.v()(x)},
          {&o.h_inv(), o.h_inv()(x)}, {&o.v_inv(), o.v_inv()(x)}};
      for (const auto &[p, y] : steps) {
        Point ty = (*p)(t[x]);
        if (!set[y]) {
          set[y] = 1;
          t[y] = ty;
          stack.push_back(y);
        } else if (t[y] != ty) {
          ok = false;
          break;
        }
      }
    }
    if (ok)
      res.emplace_back(t);
  }
  return res;
}

Origami quotient_by_translation(const Origami &o, const Permutation &t)
{
  if (t.degree() != o.size())
    throw std::invalid_argument("quotient: translation degree mismatch");
  if (t.is_identity())
    throw std::invalid_argument("quotient: identity is not a free translation");
  if (compose(t, o.h()) != compose(o.h(), t) || compose(t, o.v()) != compose(o.v(), t))
    throw std::invalid_argument("quotient: permutation is not a translation");
  auto type = t.cycle_type();
  if (type.size() * type.front() != o.size() ||
      std::any_of(type.begin(), type.end(), [&](auto l) { return l != type.front(); }))
    throw std::invalid_argument("quotient: translation does not act freely");

  std::vector<Point> orbit(o.size(), std::numeric_limits<Point>::max());
  Point count = 0;
  for (Point s = 0; s < o.size(); ++s) {
    if (orbit[s] != std::numeric_limits<Point>::max())
      continue;
    for (Point x = s; orbit[x] == std::numeric_limits<Point>::max(); x = t(x))
      orbit[x] = count;
    ++count;
  }
  std::vector<Point> h(count), v(count);
  for (Point s = 0; s < o.size(); ++s) {
    h[orbit[s]] = orbit[o.h()(s)];
    v[orbit[s]] = orbit[o.v()(s)];
  }
  return Origami(Permutation(std::move(h)), Permutation(std::move(v)));
}

LParameters l_parameters(long long b, long long e)
{
  if (e < -1 || e > 1)
    throw std::invalid_argument("l_origami: e must be -1, 0 or 1");
  if (b < 1)
    throw std::invalid_argument("l_origami: b must be positive");
  if (e == 1 && b % 2)
    throw std::invalid_argument("l_origami: e = 1 requires b even");
  if (e + 1 >= b)
    throw std::invalid_argument("l_origami: requires e + 1 < b");
  long long disc = e * e + 4 * b;
  long long d = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (d * d > disc)
    --d;
  while ((d + 1) * (d + 1) <= disc)
    ++d;
  if (d * d != disc)
    throw std::invalid_argument("l_origami: e^2 + 4b = " + std::to_string(disc) +
                                " is not a perfect square");
  return {b, e, d, (e + d) / 2};
}

Origami l_origami(long long b, long long e)
{
  LParameters p = l_parameters(b, e);
  const Point w = static_cast<Point>(p.row());
  const Point lam = static_cast<Point>(p.lambda);
  const Point n = w + lam;
  std::vector<Point> h(n), v(n);
  std::iota(h.begin(), h.end(), Point{0});
  std::iota(v.begin(), v.end(), Point{0});
  for (Point i = 0; i < w; ++i)
    h[i] = (i + 1) % w;
  std::vector<Point> column{0};
  for (Point j = 0; j < lam; ++j)
    column.push_back(w + j);
  for (std::size_t k = 0; k < column.size(); ++k)
    v[column[k]] = column[(k + 1) % column.size()];
  return Origami(Permutation(std::move(h)), Permutation(std::move(v)));
}

Origami parse_origami(std::string_view text)
{
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("malformed origami text \"" + std::string(text) +
                                "\": " + why);
  };
  auto pn = text.find("n=");
  auto ph = text.find("h=");
  auto pv = text.find("v=");
  if (pn == std::string_view::npos || ph == std::string_view::npos ||
      pv == std::string_view::npos || !(pn < ph && ph < pv))
    fail("expected n=<int> h=<cycles> v=<cycles>");
  std::string ntext(text.substr(pn + 2, ph - pn - 2));
  std::size_t pos = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(ntext, &pos);
  } catch (const std::exception &) {
    fail("bad square count");
  }
  while (pos < ntext.size() && std::isspace(static_cast<unsigned char>(ntext[pos])))
    ++pos;
  if (pos != ntext.size() || n == 0)
    fail("bad square count");
  Permutation h = parse_cycles(text.substr(ph + 2, pv - ph - 2), n);
  Permutation v = parse_cycles(text.substr(pv + 2), n);
  return Origami(std::move(h), std::move(v));
}

std::string to_text(const Origami &o)
{
  return "n=" + std::to_string(o.size()) + " h=" + format_cycles(o.h()) +
         " v=" + format_cycles(o.v());
}

} // namespace echoes
