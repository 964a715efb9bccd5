#include "echoes/acceptance.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "echoes/classify.hpp"
#include "echoes/covers.hpp"
#include "echoes/homology.hpp"
#include "echoes/lshape.hpp"
#include "echoes/monodromy.hpp"
#include "echoes/origami.hpp"

namespace echoes {

namespace {

template <class T> std::string join(const std::vector<T> &xs, const char *sep = ",")
{
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s << (i ? sep : "") << xs[i];
  return s.str();
}

std::string show(const Partition &p)
{
  std::string s;
  for (const auto &b : p)
    s += "{" + join(b) + "}";
  return s;
}

Partition sorted(Partition p)
{
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<std::pair<long long, long long>> admissible(long long max_b)
{
  std::vector<std::pair<long long, long long>> out;
  for (long long b = 1; b <= max_b; ++b)
    for (long long e : {-1LL, 0LL, 1LL})
      if (e + 1 < b && !(e == 1 && b % 2))
        out.emplace_back(b, e);
  return out;
}

bool decagon_counts(std::ostringstream &d, const AcceptanceOptions &opts)
{
  static const std::vector<unsigned long long> expected{3, 1, 3, 8, 3, 1, 3, 1, 24, 3, 3, 1, 3, 8};
  const unsigned max_n = opts.fast ? 7 : 15;
  std::vector<unsigned long long> got;
  for (unsigned n = 2; n <= max_n; ++n)
    got.push_back(decagon_cyclic_echo_count(n));
  d << "N(2.." << max_n << ") = " << join(got);
  return std::equal(got.begin(), got.end(), expected.begin());
}

bool decagon_mod2(std::ostringstream &d)
{
  std::vector<ResidueMatrix4> gens{ResidueMatrix4(builtin_matrix(Builtin::rho_R), 2),
                                   ResidueMatrix4(builtin_matrix(Builtin::rho_T), 2)};
  auto group = group_closure(gens);
  auto k = dihedral_structure(group);
  std::vector<unsigned> labels(15);
  for (unsigned i = 0; i < 15; ++i)
    labels[i] = i + 1;
  Partition p = orbit_partition(gens, labels);
  d << "order " << group.size() << ", dihedral k=" << (k ? std::to_string(*k) : "none") << ", blocks "
    << show(p);
  return group.size() == 10 && k == 5u && p.size() == 3 &&
         std::all_of(p.begin(), p.end(), [](const auto &b) { return b.size() == 5; });
}

bool decagon_exact(std::ostringstream &d)
{
  DecagonReport r = verify_decagon_periods();
  std::size_t held = std::count_if(r.relations.begin(), r.relations.end(),
                                   [](const auto &x) { return x.holds; });
  d << held << "/" << r.relations.size() << " period identities, rank " << r.period_rank
    << ", rhoR^5 = -I " << (r.rho_r5_minus_identity ? "yes" : "no") << "; tolerance exact";
  return r.ok() && r.relations.size() == 8;
}

bool group_orders(std::ostringstream &d)
{
  struct Row {
    long long b, e;
    std::size_t order;
  };
  const std::vector<Row> rows{{2, 0, 8}, {4, 1, 12}, {4, -1, 12}, {3, 0, 8}, {3, -1, 10}};
  bool ok = true;
  for (const auto &r : rows) {
    std::size_t got = group_closure(weierstrass_generators(r.b, r.e)).size();
    d << "D=" << r.e * r.e + 4 * r.b << ":" << got << " ";
    ok = ok && got == r.order;
  }
  for (long long e : {1LL, -1LL}) {
    std::vector<ResidueMatrix4> hv{ResidueMatrix4(builtin_matrix(Builtin::H, 4, e), 2),
                                   ResidueMatrix4(builtin_matrix(Builtin::V, 4, e), 2)};
    std::size_t o = group_closure(hv).size();
    std::size_t c = constrained_subgroup(ResidueMatrix4(builtin_matrix(Builtin::T, 4, e), 2),
                                         hyperelliptic_labels())
                        .size();
    d << "<H,V>(4," << e << ")=" << o << " constrained=" << c << " ";
    ok = ok && o == 6 && c == 12;
  }
  std::size_t sp = sp4_f2().size();
  d << "Sp(4,F2)=" << sp;
  return ok && sp == 720;
}

bool echo_partitions(std::ostringstream &d, const AcceptanceOptions &opts)
{
  struct Column {
    int residue;
    Partition hyp, odd;
    std::vector<std::pair<long long, int>> cases; // (D, e)
  };
  std::vector<Column> cols{
      {0, {{2}, {3, 5, 9, 13}}, {{1, 7, 11, 15}, {4, 6}, {8, 10, 12, 14}}, {{8, 0}, {16, 0}}},
      {1, {{2, 5}, {3, 9, 13}}, {{1, 6, 8, 11, 12, 15}, {4, 10, 14}, {7}}, {{17, 1}, {17, -1}, {25, 1}}},
      {4, {{2, 3, 9, 13}, {5}}, {{1, 4, 11, 14}, {6, 7, 8, 12}, {10, 15}}, {{12, 0}, {20, 0}, {28, 0}}},
      {5, {{2, 3, 5, 9, 13}}, {{1, 8, 11, 12, 14}, {4, 6, 7, 10, 15}}, {{5, -1}, {13, -1}, {21, -1}}}};
  bool ok = true;
  for (const auto &c : cols) {
    std::size_t used = 0;
    for (auto [dd, e] : c.cases) {
      if (opts.fast && dd > 17)
        continue;
      EchoTable t = echoes_of_WD(dd, e);
      const std::size_t want = c.residue == 5 ? 3 : 5;
      bool match = sorted(t.hyp) == sorted(c.hyp) && sorted(t.odd) == sorted(c.odd) &&
                   t.echo_count() == want;
      ok = ok && match;
      ++used;
      if (!match)
        d << "mismatch D=" << dd << " e=" << e << " hyp " << show(t.hyp) << " odd " << show(t.odd) << "; ";
    }
    d << "D=" << c.residue << " mod 8: " << used << " cases; ";
    ok = ok && used >= (opts.fast ? 1u : 2u);
  }
  return ok;
}

bool matrix_identities(std::ostringstream &d)
{
  std::size_t n = 0;
  for (auto [b, e] : admissible(20)) {
    IntMatrix4 t = builtin_matrix(Builtin::T, b, e), h = builtin_matrix(Builtin::H, b, e),
               v = builtin_matrix(Builtin::V, b, e);
    bool ok = t * t == t.scaled(e) + IntMatrix4::identity().scaled(b) && self_adjoint(t) &&
              is_symplectic(h) && is_symplectic(v) && commutes(h, t) && commutes(v, t);
    if (!ok) {
      d << "fails at (b,e)=(" << b << "," << e << ")";
      return false;
    }
    ++n;
  }
  d << n << " parameter pairs with b <= 20; exact";
  return true;
}

bool multitwists(std::ostringstream &d)
{
  std::size_t n = 0;
  for (auto [b, e] : admissible(20)) {
    IntMatrix4 h = builtin_matrix(Builtin::H, b, e), v = builtin_matrix(Builtin::V, b, e);
    bool ok = decomposition_twist(Decomposition::horizontal, b, e) == h &&
              decomposition_twist(Decomposition::vertical, b, e) == v &&
              v * Vec4{-1, 0, 1, 0} == Vec4{-1, 0, 1, b - e - 1} &&
              modulus_ratio(Decomposition::vertical, b, e) == Rational(b - e - 1);
    if (e == 1 && b % 4 == 2 && b > 6)
      ok = ok && modulus_ratio(Decomposition::slope, b, e) == Rational(b / 2 - e - 2, 2);
    if (e == 1 && b % 4 == 0)
      ok = ok && modulus_ratio(Decomposition::script_slope, b, e) == Rational(b, 4);
    if (!ok) {
      d << "fails at (b,e)=(" << b << "," << e << ")";
      return false;
    }
    ++n;
  }
  d << "H, V and modulus ratios reproduced for " << n << " pairs; exact in Q(lambda)";
  return true;
}

bool veech_word(std::ostringstream &d)
{
  const Matrix2 l = generator_matrix(Generator::L), r = generator_matrix(Generator::R);
  const Matrix2 m = l * r * r * r * l;
  const Origami base = parse_origami("n=5 h=(1,2) v=(2,3,4,5)");
  const Origami up = parse_origami("n=10 h=(1,2)(6,7)(3,8)(4,9)(5,10) v=(2,3,4,5)(7,8,9,10)");
  auto word = [](Origami o) {
    std::vector<Origami> steps;
    o = act_generator(o, Generator::L);
    steps.push_back(o);
    for (int i = 0; i < 3; ++i)
      o = act_generator(o, Generator::R);
    steps.push_back(o);
    steps.push_back(act_generator(o, Generator::L));
    return steps;
  };
  auto s = word(base);
  auto t = word(up);
  bool perms = format_cycles(s[0].h()) == "(1,5,4,3,2)" && format_cycles(s[1].v()) == "(1,4,3,2)" &&
               format_cycles(s[2].h()) == "(1,5)" && format_cycles(t[2].h()) == "(1,10)(5,6)" &&
               format_cycles(t[2].v()) == "(1,4,8,2)(3,7,6,9)(5,10)";
  bool in_base = veech_contains(base, m), in_up = veech_contains(up, m);
  d << "LR^3L=[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]], base " << in_base << ", lift "
    << in_up << ", eps'=" << format_cycles(t[2].h()) << " delta'=" << format_cycles(t[2].v());
  return m == Matrix2{4, 3, 5, 4} && in_base && !in_up && perms;
}

bool covers_check(std::ostringstream &d, const AcceptanceOptions &opts)
{
  const long long max_d = opts.fast ? 5 : 7;
  std::size_t tested = 0, special = 0;
  bool ok = true;
  const Stratum h22{{2, 2}, 3};
  for (long long dd = 3; dd <= max_d; ++dd)
    for (long long e : square_spins(dd)) {
      const long long b = (dd * dd - e * e) / 4;
      OrbitReport orbit = sl2z_orbit(l_origami(b, e));
      for (const auto &code : orbit.representatives) {
        const Origami o = from_canonical(code);
        auto covers = all_double_covers(o);
        std::size_t odd_translations = 0;
        for (const auto &c : covers) {
          Origami up = lift(c);
          if (!(stratum(up) == h22) || !is_reduced(up))
            ok = false;
          if (translations(up).size() != 2)
            ++odd_translations;
        }
        const bool w9 = dd == 3;
        if (covers.size() != 15 || odd_translations != (w9 ? 1u : 0u))
          ok = false;
        if (w9 && code == canonical_form(l_origami(b, e)))
          special = odd_translations;
        ++tested;
      }
    }
  d << tested << " genus-2 origamis, 15 covers each, lifts in H(2,2) and reduced; W9 special covers "
    << special;
  return ok && special == 1;
}

bool arf_split(std::ostringstream &d, const AcceptanceOptions &opts)
{
  const long long max_d = opts.fast ? 7 : 11;
  bool ok = true;
  std::size_t n = 0;
  for (long long dd = 3; dd <= max_d; ++dd)
    for (long long e : square_spins(dd)) {
      const long long b = (dd * dd - e * e) / 4;
      const Origami o = l_origami(b, e);
      auto covers = double_covers(o, l_origami_basis(b, e));
      std::vector<unsigned> zero;
      for (unsigned label = 1; label <= covers.size(); ++label)
        if (arf_invariant(lift(covers[label - 1])) == 0)
          zero.push_back(label);
      ok = ok && zero == hyperelliptic_labels();
      ++n;
    }
  int left = arf_invariant(parse_origami("n=6 h=(2,3,5,6) v=(1,2)(4,5)"));
  int right = arf_invariant(parse_origami("n=6 h=(1,4)(2,3)(5,6) v=(1,2)(4,5)"));
  d << n << " L-origamis with Arf 0 exactly on {2,3,5,9,13}: " << (ok ? "yes" : "no")
    << "; two-surface example Arf " << left << " / " << right;
  return ok && left == 1 && right == 0;
}

bool sts_counts(std::ostringstream &d, const AcceptanceOptions &opts)
{
  std::vector<unsigned> ns{3, 4, 5, 7};
  if (!opts.fast)
    ns.push_back(11);
  bool ok = true;
  for (unsigned n : ns) {
    StsCensus c = verify_sts_orbits(n);
    d << "n=" << n << ":" << c.orbit_count() << " orbits";
    ok = ok && c.orbit_count() == c.expected_orbit_count();
    for (const auto &comp : c.components) {
      ok = ok && comp.all_lifts_accounted && comp.blocks_match_table && comp.arf_matches_labels &&
           comp.sizes_match_blocks;
      if (n % 2) {
        auto f = count_formulas(n);
        const bool spin0 = ((n - comp.e) % 4 + 4) % 4 == 0;
        const unsigned long long want = spin0 ? f.a : f.b.value_or(0);
        if (n == 3)
          ok = ok && comp.base_orbit == f.a;
        else
          ok = ok && comp.base_orbit == want;
      }
    }
    d << " [base";
    for (const auto &comp : c.components)
      d << " " << comp.base_orbit;
    d << "]; ";
  }
  return ok;
}

bool worked_example(std::ostringstream &d, std::vector<std::string> &flags)
{
  StsCensus c = verify_sts_orbits(11);
  std::vector<std::size_t> spin0, spin1;
  for (const auto &comp : c.components)
    for (const auto &o : comp.orbits)
      if (o.arf == 1 && o.primitive)
        (((11 - comp.e) % 4 + 4) % 4 == 0 ? spin0 : spin1).push_back(o.size);
  auto has = [](const std::vector<std::size_t> &v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  d << "odd primitive lifted orbits: spin 0 {" << join(spin0) << "}, spin 1 {" << join(spin1) << "}";
  bool ok = has(spin1, 1080) && has(spin1, 180) && has(spin0, 1350) && spin0.size() == 2 &&
            spin1.size() == 2;
  if (ok) {
    std::size_t fourth = spin0[0] == 1350 ? spin0[1] : spin0[0];
    if (fourth != 900)
      flags.push_back("spin-0 fourth orbit has size " + std::to_string(fourth) +
                      " by direct BFS; the published figure is 900 (= 4*225), primitive block sizes give " +
                      std::to_string(3 * 225));
  }
  return ok;
}

bool primitivity(std::ostringstream &d)
{
  std::size_t checked = 0;
  for (long long dd = 3; dd <= 30; ++dd)
    for (long long e : square_spins(dd))
      for (unsigned l = 1; l <= 15; ++l) {
        if (is_primitive_cover(dd, e, l) != primitive_cover_oracle(dd, e, HomologyVector::from_label(l, 2))) {
          d << "closed form and oracle disagree at d=" << dd << " e=" << e << " label " << l;
          return false;
        }
        ++checked;
      }
  struct Column {
    std::vector<std::pair<long long, long long>> cases;
    Partition hyp, odd;
  };
  const std::vector<Column> cols{
      {{{4, 0}, {8, 0}}, {{3, 5, 9, 13}}, {{1, 7, 11, 15}, {8, 10, 12, 14}}},
      {{{5, 1}, {7, -1}}, {{3, 9, 13}}, {{1, 6, 8, 11, 12, 15}, {4, 10, 14}}},
      {{{6, 0}, {10, 0}}, {{2, 3, 9, 13}}, {{1, 4, 11, 14}, {6, 7, 8, 12}}},
      {{{5, -1}, {7, 1}}, {{2, 5}, {3, 9, 13}}, {{1, 6, 8, 11, 12, 15}, {7}}}};
  bool ok = true;
  for (const auto &c : cols)
    for (auto [dd, e] : c.cases) {
      EchoTable t = primitive_echo_table(dd, e);
      if (sorted(t.hyp) != sorted(c.hyp) || sorted(t.odd) != sorted(c.odd)) {
        d << "primitive table mismatch at d=" << dd << " e=" << e << "; ";
        ok = false;
      }
    }
  std::vector<std::size_t> types;
  for (long long dd : {3, 4, 6, 8, 5, 7, 9})
    types.push_back(branched_cover_types(dd));
  d << checked << " (d,e,label) agree; primitive table " << (ok ? "reproduced" : "differs")
    << "; types d=3,4,6,8,5,7,9: " << join(types);
  return ok && types == std::vector<std::size_t>{3, 3, 3, 3, 7, 7, 7};
}

bool eigenbasis(std::ostringstream &d, const AcceptanceOptions &opts)
{
  bool ok = true;
  for (long long b : {4, 9})
    for (unsigned n : {3u, 5u, 7u, 9u}) {
      if (std::gcd(static_cast<long long>(n), b) != 1 || (opts.fast && n > 7))
        continue;
      EigenbasisReport r = eigenbasis_checks(b, n);
      const bool eig = std::all_of(r.eigenvectors.begin(), r.eigenvectors.end(), [](bool x) { return x; });
      const bool local = r.determinant_ok && eig && r.eigenbasis_determinant == 4 * b && r.block_diagonal;
      d << "(b=" << b << ",n=" << n << ") det " << r.determinant << " eig " << (eig ? "ok" : "bad")
        << " block " << (r.block_diagonal ? "ok" : "bad") << " classes " << r.family_classes << " vs phi "
        << r.phi << " (H,V-orbits " << r.hv_orbits << "); ";
      ok = ok && local && r.bound_holds();
    }
  return ok;
}

bool escalator(std::ostringstream &d)
{
  const Origami o = parse_origami("n=8 h=(1,2)(3,4)(5,6)(7,8) v=(2,3)(4,5)(6,7)(8,1)");
  const Origami q1 = parse_origami("n=4 h=(1,2)(3,4) v=(1,3)");
  const Origami q2 = parse_origami("n=4 h=(2,3) v=(1,2)(3,4)");
  std::set<CanonicalCode> forms;
  bool saw1 = false, saw2 = false;
  std::size_t involutions = 0;
  for (const auto &t : translations(o)) {
    if (t.order() != 2)
      continue;
    ++involutions;
    Origami q = quotient_by_translation(o, t);
    forms.insert(canonical_form(q));
    saw1 = saw1 || isomorphic(q, q1);
    saw2 = saw2 || isomorphic(q, q2);
  }
  d << involutions << " order-2 translations, " << forms.size() << " quotient classes; both printed quotients "
    << (saw1 && saw2 ? "found" : "missing") << ", isomorphic to each other: " << (isomorphic(q1, q2) ? "yes" : "no");
  return saw1 && saw2 && !isomorphic(q1, q2);
}

struct Entry {
  int id;
  const char *name;
};

const Entry entries[] = {{1, "decagon-counts"},         {2, "decagon-mod2"},   {3, "decagon-exact"},
                         {4, "group-orders"},   {5, "echo-partitions"},         {6, "matrix-identities"},
                         {7, "multitwists"},    {8, "veech-word"},    {9, "covers"},
                         {10, "arf-split"},     {11, "sts-orbits"},    {12, "worked-example"},
                         {13, "primitivity"},   {14, "eigenbasis"},    {15, "escalator"}};

} // namespace

const std::set<int> &known_deviations()
{
  static const std::set<int> ids{14};
  return ids;
}

bool AcceptanceReport::all_pass() const
{
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult &r) { return r.outcome != Outcome::fail; });
}

bool AcceptanceReport::acceptable() const
{
  return std::all_of(results.begin(), results.end(), [](const CriterionResult &r) {
    return r.outcome != Outcome::fail || known_deviations().count(r.id);
  });
}

CriterionResult run_criterion(int id, const AcceptanceOptions &opts)
{
  if (id < 1 || id > 15)
    throw std::invalid_argument("criteria are numbered 1..15");
  CriterionResult r;
  r.id = id;
  r.name = entries[id - 1].name;
  if (id == 12 && opts.fast) {
    r.outcome = Outcome::skip;
    r.detail = "needs n = 11";
    return r;
  }
  std::ostringstream d;
  bool ok = false;
  try {
    switch (id) {
    case 1: ok = decagon_counts(d, opts); break;
    case 2: ok = decagon_mod2(d); break;
    case 3: ok = decagon_exact(d); break;
    case 4: ok = group_orders(d); break;
    case 5: ok = echo_partitions(d, opts); break;
    case 6: ok = matrix_identities(d); break;
    case 7: ok = multitwists(d); break;
    case 8: ok = veech_word(d); break;
    case 9: ok = covers_check(d, opts); break;
    case 10: ok = arf_split(d, opts); break;
    case 11: ok = sts_counts(d, opts); break;
    case 12: ok = worked_example(d, r.flags); break;
    case 13: ok = primitivity(d); break;
    case 14: ok = eigenbasis(d, opts); break;
    case 15: ok = escalator(d); break;
    }
  } catch (const std::exception &ex) {
    d << "exception: " << ex.what();
    ok = false;
  }
  r.outcome = ok ? Outcome::pass : Outcome::fail;
  r.detail = d.str();
  return r;
}

AcceptanceReport run_acceptance(const AcceptanceOptions &opts)
{
  AcceptanceReport rep;
  for (int id = 1; id <= 15; ++id)
    rep.results.push_back(run_criterion(id, opts));
  return rep;
}

const char *to_string(Outcome o)
{
  switch (o) {
  case Outcome::pass:
    return "PASS";
  case Outcome::fail:
    return "FAIL";
  case Outcome::skip:
    return "SKIP";
  }
  return "?";
}

std::string format_result(const CriterionResult &r)
{
  std::ostringstream s;
  std::string detail = r.detail;
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';'))
    detail.pop_back();
  s << to_string(r.outcome) << (r.id < 10 ? "  " : " ") << r.id << " " << r.name << ": " << detail;
  if (r.outcome == Outcome::fail && known_deviations().count(r.id))
    s << " (known deviation)";
  for (const auto &f : r.flags)
    s << "\n  flag: " << f;
  return s.str();
}

} // namespace echoes
