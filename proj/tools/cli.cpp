#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "echoes/acceptance.hpp"
#include "echoes/classify.hpp"
#include "echoes/covers.hpp"
#include "echoes/homology.hpp"
#include "echoes/monodromy.hpp"
#include "echoes/origami.hpp"

namespace echoes::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string cells(const Partition &p)
{
  std::string s;
  for (const auto &b : p) {
    s += s.empty() ? "{" : " {";
    for (std::size_t i = 0; i < b.size(); ++i)
      s += (i ? "," : "") + std::to_string(b[i]);
    s += "}";
  }
  return s.empty() ? "-" : s;
}

json echo_json(const EchoTable &t)
{
  return {{"D", t.discriminant}, {"b", t.b},     {"e", t.e}, {"group_order", t.group_order},
          {"hyp", t.hyp},        {"odd", t.odd}, {"echoes", t.echo_count()}};
}

void echo_table(std::ostream &out, const EchoTable &t)
{
  out << "| D | b | e | D mod 8 | order of G | hyp | odd |\n"
      << "|---|---|---|---|---|---|---|\n"
      << "| " << t.discriminant << " | " << t.b << " | " << t.e << " | " << t.discriminant % 8 << " | "
      << t.group_order << " | " << cells(t.hyp) << " | " << cells(t.odd) << " |\n";
}

int cmd_orbit(const std::string &text, std::size_t cap, bool as_json, std::ostream &out)
{
  Origami o = parse_origami(text);
  OrbitReport rep = sl2z_orbit(o, {cap, false});
  Stratum s = stratum(o);
  const bool reduced = is_reduced(o);
  if (as_json) {
    json reps = json::array();
    for (const auto &c : rep.representatives)
      reps.push_back(to_text(from_canonical(c)));
    out << json{{"origami", to_text(o)},
                {"squares", o.size()},
                {"stratum", s.to_string()},
                {"genus", s.genus},
                {"reduced", reduced},
                {"size", rep.size},
                {"representatives", reps}}
               .dump(2)
        << "\n";
  } else {
    out << "origami  " << to_text(o) << "\n"
        << "squares  " << o.size() << "\n"
        << "stratum  " << s.to_string() << "\n"
        << "reduced  " << (reduced ? "yes" : "no") << "\n"
        << "size     " << rep.size << "\n";
  }
  return 0;
}

int cmd_echoes(long long d_disc, std::optional<int> e, bool as_json, std::ostream &out)
{
  EchoTable t = echoes_of_WD(d_disc, e);
  if (as_json)
    out << echo_json(t).dump(2) << "\n";
  else
    echo_table(out, t);
  return 0;
}

int cmd_primitive(long long d, long long e, bool as_json, std::ostream &out)
{
  PrimitivityRecord r = primitivity_record(d, e);
  EchoTable t = primitive_echo_table(d, e);
  auto [dm, dem] = residue_class(d, e);
  if (as_json) {
    json labels = json::array();
    for (unsigned l = 1; l <= 15; ++l)
      labels.push_back({{"label", l}, {"primitive", static_cast<bool>(r.primitive[l - 1])},
                        {"index", r.index[l - 1]}});
    out << json{{"d", d},          {"e", e},          {"class", {dm, dem}}, {"labels", labels},
                {"hyp", t.hyp},    {"odd", t.odd},    {"types", t.echo_count()}}
               .dump(2)
        << "\n";
  } else {
    out << "| label | primitive | index |\n|---|---|---|\n";
    for (unsigned l = 1; l <= 15; ++l)
      out << "| " << l << " | " << (r.primitive[l - 1] ? "yes" : "no") << " | " << r.index[l - 1] << " |\n";
    out << "\n| (d, d-e) mod 4 | hyp | odd |\n|---|---|---|\n"
        << "| (" << dm << "," << dem << ") | " << cells(t.hyp) << " | " << cells(t.odd) << " |\n";
  }
  return 0;
}

int cmd_decagon(unsigned max_n, bool units, bool as_json, std::ostream &out)
{
  if (max_n < 2)
    throw UsageError("--max-n must be at least 2");
  const EchoConvention c = units ? EchoConvention::unit_classes : EchoConvention::primitive_vectors;
  std::vector<unsigned long long> counts;
  for (unsigned n = 2; n <= max_n; ++n)
    counts.push_back(decagon_cyclic_echo_count(n, c));
  if (as_json) {
    json rows = json::array();
    for (unsigned n = 2; n <= max_n; ++n)
      rows.push_back({{"n", n}, {"N", counts[n - 2]}});
    out << json{{"convention", units ? "unit_classes" : "primitive_vectors"}, {"counts", rows}}.dump(2)
        << "\n";
  } else {
    std::ostringstream head, rule, row;
    head << "| n |";
    rule << "|---|";
    row << "| N(n) |";
    for (unsigned n = 2; n <= max_n; ++n) {
      head << " " << n << " |";
      rule << "---|";
      row << " " << counts[n - 2] << " |";
    }
    out << head.str() << "\n" << rule.str() << "\n" << row.str() << "\n";
  }
  return 0;
}

int cmd_covers(const std::string &text, bool as_json, std::ostream &out)
{
  Origami o = parse_origami(text);
  if (stratum(o).genus != 2)
    throw std::invalid_argument("covers needs a genus-2 origami");
  const SymplecticBasis basis = symplectic_basis(o);
  json rows = json::array();
  std::ostringstream table;
  table << "| label | lift | stratum | arf | translations | lattice index |\n|---|---|---|---|---|---|\n";
  for (const auto &c : double_covers(o, basis)) {
    const unsigned label = cover_label(o, basis, c).label;
    Origami up = lift(c);
    Stratum s = stratum(up);
    std::optional<int> arf;
    if (std::all_of(s.zero_orders.begin(), s.zero_orders.end(), [](int k) { return k % 2 == 0; }))
      arf = arf_invariant(up);
    const std::size_t tr = translations(up).size();
    const long long index = absolute_period_lattice(up).index();
    json row{{"label", label}, {"lift", to_text(up)}, {"stratum", s.to_string()}, {"translations", tr},
             {"lattice_index", index}};
    row["arf"] = arf ? json(*arf) : json(nullptr);
    rows.push_back(row);
    table << "| " << label << " | " << to_text(up) << " | " << s.to_string() << " | "
          << (arf ? std::to_string(*arf) : "-") << " | " << tr << " | " << index << " |\n";
  }
  if (as_json)
    out << json{{"origami", to_text(o)}, {"covers", rows}}.dump(2) << "\n";
  else
    out << table.str();
  return 0;
}

int cmd_sts(unsigned n, unsigned cap, bool as_json, std::ostream &out)
{
  StsCensus c = verify_sts_orbits(n, cap);
  bool ok = c.orbit_count() == c.expected_orbit_count();
  json comps = json::array();
  std::ostringstream table;
  table << "| e | base orbit | lifted orbit | labels | arf | primitive | translations |\n"
        << "|---|---|---|---|---|---|---|\n";
  for (const auto &comp : c.components) {
    ok = ok && comp.all_lifts_accounted && comp.blocks_match_table && comp.arf_matches_labels &&
         comp.sizes_match_blocks;
    json orbits = json::array();
    for (const auto &lo : comp.orbits) {
      orbits.push_back({{"size", lo.size}, {"labels", lo.labels}, {"arf", lo.arf},
                        {"primitive", lo.primitive}, {"translations", lo.translations}});
      table << "| " << comp.e << " | " << comp.base_orbit << " | " << lo.size << " | "
            << cells({lo.labels}) << " | " << lo.arf << " | " << (lo.primitive ? "yes" : "no") << " | "
            << lo.translations << " |\n";
    }
    comps.push_back({{"b", comp.b},
                     {"e", comp.e},
                     {"base_orbit", comp.base_orbit},
                     {"orbits", orbits},
                     {"all_lifts_accounted", comp.all_lifts_accounted},
                     {"blocks_match_table", comp.blocks_match_table},
                     {"arf_matches_labels", comp.arf_matches_labels},
                     {"sizes_match_blocks", comp.sizes_match_blocks}});
  }
  if (as_json)
    out << json{{"n", n},
                {"orbit_count", c.orbit_count()},
                {"expected", c.expected_orbit_count()},
                {"components", comps}}
               .dump(2)
        << "\n";
  else
    out << table.str() << "\norbits " << c.orbit_count() << " (expected " << c.expected_orbit_count()
        << ")\n";
  return ok ? 0 : 1;
}

int cmd_verify(bool fast, bool as_json, std::ostream &out)
{
  AcceptanceReport rep = run_acceptance({fast});
  if (as_json) {
    json rows = json::array();
    for (const auto &r : rep.results)
      rows.push_back({{"id", r.id},
                      {"name", r.name},
                      {"outcome", to_string(r.outcome)},
                      {"detail", r.detail},
                      {"flags", r.flags},
                      {"known_deviation", known_deviations().count(r.id) > 0}});
    out << json{{"fast", fast}, {"criteria", rows}, {"all_pass", rep.all_pass()}}.dump(2) << "\n";
  } else {
    for (const auto &r : rep.results)
      out << format_result(r) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Square-tiled surfaces, double covers and their monodromy"};
  app.require_subcommand(1, 1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.fallthrough();

  std::string origami_text;
  std::size_t orbit_cap = 1'000'000;
  auto *orbit = app.add_subcommand("orbit", "SL(2,Z)-orbit of an origami");
  orbit->add_option("--origami", origami_text, "\"n=<int> h=<cycles> v=<cycles>\"")->required();
  orbit->add_option("--cap", orbit_cap, "Orbit size cap")->capture_default_str();

  long long discriminant = 0;
  std::optional<int> spin;
  auto *echoes = app.add_subcommand("echoes", "Echoes of W_D: mod-2 orbits of the 15 double covers");
  echoes->add_option("--discriminant", discriminant, "D = e^2 + 4b")->required();
  echoes->add_option("--e", spin, "Spin parameter e in {-1,0,1}");

  long long d = 0, e = 0;
  auto *primitive = app.add_subcommand("primitive", "Primitive covers for D = d^2");
  primitive->add_option("--d", d, "square root of D")->required();
  primitive->add_option("--e", e, "e in {-1,0,1}")->required();

  unsigned max_n = 15;
  bool units = false;
  auto *decagon = app.add_subcommand("decagon", "Cyclic echo counts N(n) for the decagon curve");
  decagon->add_option("--max-n", max_n, "Largest n")->capture_default_str();
  decagon->add_flag("--unit-classes", units, "Identify gamma with its unit multiples");

  std::string cover_text;
  auto *covers = app.add_subcommand("covers", "The 15 unramified double covers of a genus-2 origami");
  covers->add_option("--origami", cover_text, "\"n=<int> h=<cycles> v=<cycles>\"")->required();

  unsigned sts_n = 0, sts_cap = 11;
  auto *sts = app.add_subcommand("sts", "Orbit census of the lifts of W_{n^2}");
  sts->add_option("--n", sts_n, "Number of squares of the base")->required();
  sts->add_option("--cap", sts_cap, "Largest allowed n")->capture_default_str();

  bool fast = false;
  auto *verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_flag("--fast", fast, "Restrict to n <= 7 and D <= 17");

  std::vector<std::string> argv_store{"echoes"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &ex) {
    err << "echoes: " << ex.what() << "\n";
    return 2;
  }

  const bool as_json = format == "json";
  try {
    if (*orbit)
      return cmd_orbit(origami_text, orbit_cap, as_json, out);
    if (*echoes)
      return cmd_echoes(discriminant, spin, as_json, out);
    if (*primitive)
      return cmd_primitive(d, e, as_json, out);
    if (*decagon)
      return cmd_decagon(max_n, units, as_json, out);
    if (*covers)
      return cmd_covers(cover_text, as_json, out);
    if (*sts)
      return cmd_sts(sts_n, sts_cap, as_json, out);
    if (*verify)
      return cmd_verify(fast, as_json, out);
  } catch (const UsageError &ex) {
    err << "echoes: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &ex) {
    err << "echoes: " << ex.what() << "\n";
    return 2;
  } catch (const std::out_of_range &ex) {
    err << "echoes: " << ex.what() << "\n";
    return 2;
  } catch (const OrbitCapExceeded &ex) {
    err << "echoes: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception &ex) {
    err << "echoes: internal error: " << ex.what() << "\n";
    return 1;
  }
  err << "echoes: no subcommand\n";
  return 2;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, out, err);
}

} // namespace echoes::cli
