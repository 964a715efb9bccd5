#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "echoes/matrix4.hpp"
#include "echoes/monodromy.hpp"

namespace echoes {

// Labels x1 + 2 y1 + 4 x2 + 8 y2 of the covers lifting L(b, e) to the
// hyperelliptic component.
const std::vector<unsigned> &hyperelliptic_labels();
bool is_hyperelliptic_label(unsigned label);

// (b, e) with D = e^2 + 4b, e + 1 < b, b even when e = 1. Without a spin
// choice: e = 0 for even D, e = -1 for odd D.
std::pair<long long, long long> weierstrass_parameters(long long d_disc,
                                                       std::optional<int> e = std::nullopt);

// Mod-2 generators of the monodromy group: H, V, and X when D = 1 mod 8.
std::vector<ResidueMatrix4> weierstrass_generators(long long b, long long e);

struct EchoTable {
  long long discriminant = 0, b = 0, e = 0;
  std::size_t group_order = 0;
  Partition hyp, odd;

  std::size_t echo_count() const { return hyp.size() + odd.size(); }
};

EchoTable echoes_of_WD(long long d_disc, std::optional<int> e = std::nullopt);

std::size_t echo_degree(const std::vector<unsigned> &block);

// Closed-form primitivity for D = d^2.
bool is_primitive_cover(long long d, long long e, unsigned label);

// Lattice computation: image of ker f under (x1 + (lambda - e) x2, lambda y1 + y2).
bool primitive_cover_oracle(long long d, long long e, const HomologyVector &gamma);

struct PrimitivityRecord {
  long long d = 0, e = 0;
  std::vector<bool> primitive; // index label - 1
  std::vector<int> index;      // lattice index, 1 or 2
};

PrimitivityRecord primitivity_record(long long d, long long e);

// (d mod 4, (d - e) mod 4)
std::pair<long long, long long> residue_class(long long d, long long e);

// Echo partition restricted to primitive labels.
EchoTable primitive_echo_table(long long d, long long e);

// Valid spins e for D = d^2.
std::vector<long long> square_spins(long long d);

std::size_t branched_cover_types(long long d);

struct OrbitCounts {
  unsigned long long a = 0;
  std::optional<unsigned long long> b;
};

// Sizes of the two SL(2,Z)-orbits of reduced n-square origamis in H(2), n odd.
OrbitCounts count_formulas(unsigned long long n);

struct LiftedOrbit {
  std::size_t size = 0;
  std::vector<unsigned> labels; // covers of l_origami(b, e) landing here
  int arf = 0;
  bool primitive = false;       // absolute periods equal to Z^2
  std::size_t translations = 0;
};

struct ComponentCensus {
  long long b = 0, e = 0;
  std::size_t base_orbit = 0;
  std::vector<LiftedOrbit> orbits; // ordered by least label
  bool all_lifts_accounted = false;
  bool blocks_match_table = false;
  bool arf_matches_labels = false;
  bool sizes_match_blocks = false;
};

struct StsCensus {
  unsigned n = 0;
  std::vector<ComponentCensus> components;

  std::size_t orbit_count() const;
  std::size_t expected_orbit_count() const { return n % 2 && n >= 5 ? 10 : 5; }
};

StsCensus verify_sts_orbits(unsigned n, unsigned max_n = 11);

// SL(2,Z)-orbit sizes of all lifts of the orbit of l_origami(b, e) by
// connected cyclic covers of degree n.
std::vector<std::size_t> cyclic_echo_orbits(long long b, long long e, unsigned n);

} // namespace echoes
