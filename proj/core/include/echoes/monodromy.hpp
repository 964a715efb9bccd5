#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "echoes/cyclotomic.hpp"
#include "echoes/matrix4.hpp"

namespace echoes {

enum class Builtin { H, V, T, X, rho_R, rho_T, J };

IntMatrix4 builtin_matrix(Builtin which, long long b = 0, long long e = 0);
// Names: H, V, T, X, rhoR, rhoT, J.
IntMatrix4 builtin_matrix(std::string_view name, long long b = 0, long long e = 0);

bool is_symplectic(const IntMatrix4 &m);
bool is_symplectic(const ResidueMatrix4 &m);
bool commutes(const IntMatrix4 &a, const IntMatrix4 &b);
bool commutes(const ResidueMatrix4 &a, const ResidueMatrix4 &b);
// T^t J = J T
bool self_adjoint(const IntMatrix4 &t);

class ClosureCapExceeded : public std::runtime_error {
public:
  explicit ClosureCapExceeded(std::size_t cap);
};

// Sorted list of all products of the generators and their inverses.
std::vector<ResidueMatrix4> group_closure(const std::vector<ResidueMatrix4> &gens,
                                          std::size_t cap = 100'000);

std::vector<ResidueMatrix4> sp4_f2();

// Elements of Sp(4, F2) commuting with t2 and preserving the label set.
std::vector<ResidueMatrix4> constrained_subgroup(const ResidueMatrix4 &t2,
                                                 const std::vector<unsigned> &labels);

// k when the group is dihedral of order 2k; nullopt for order < 2 or a
// non-dihedral group.
std::optional<std::size_t> dihedral_structure(const std::vector<ResidueMatrix4> &group);

using Partition = std::vector<std::vector<unsigned>>;

// Components of v -- M v on the labelled vectors, each block sorted, blocks
// ordered by least label.
Partition orbit_partition(const std::vector<ResidueMatrix4> &gens,
                          const std::vector<unsigned> &labels);

enum class EchoConvention { primitive_vectors, unit_classes };

unsigned long long decagon_cyclic_echo_count(unsigned n,
                                             EchoConvention c = EchoConvention::primitive_vectors);

// x1 alpha1 + y1 beta1 + x2 alpha2 + y2 beta2 in Q(zeta_20).
CyclotomicElement decagon_period(const Vec4 &x);
// Shear p -> p + 2 cot(pi/10) Im p, exactly.
CyclotomicElement decagon_shear(const CyclotomicElement &p);
std::size_t rational_rank(const std::vector<CyclotomicElement> &xs);

struct DecagonReport {
  struct Relation {
    std::string name;
    bool holds = false;
  };
  std::vector<Relation> relations;
  std::size_t period_rank = 0;
  bool rho_r5_minus_identity = false;
  bool rho_r10_identity = false;

  bool ok() const;
};

DecagonReport verify_decagon_periods();

struct EigenbasisReport {
  long long b = 0, b_root = 0;
  unsigned n = 0;
  long long determinant = 0;
  bool determinant_ok = false;
  // T u = +-b' u for (b',0,1,0), (0,b',0,1), (b',0,-1,0), (0,b',0,-1)
  std::vector<bool> printed_eigenvectors;
  // same for (b',0,1,0), (0,1,0,b'), (b',0,-1,0), (0,1,0,-b')
  std::vector<bool> eigenvectors;
  long long eigenbasis_determinant = 0;
  bool block_diagonal = false;
  // distinct subgroups <m1, m2> of Z/n over u1 + x u3, and over all primitive
  // vectors
  std::size_t family_classes = 0;
  std::size_t all_classes = 0;
  std::size_t hv_orbits = 0;
  unsigned long long phi = 0;

  bool bound_holds() const { return family_classes >= phi; }
};

EigenbasisReport eigenbasis_checks(long long b, unsigned n);

unsigned long long euler_phi(unsigned long long n);

} // namespace echoes
