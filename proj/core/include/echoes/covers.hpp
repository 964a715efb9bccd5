#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "echoes/homology.hpp"
#include "echoes/matrix4.hpp"

namespace echoes {

// Z/n-valued edge cocycle: crossing the right edge of s adds w_right[s] to
// the sheet, crossing the top edge adds w_up[s].
struct CyclicCover {
  Origami base;
  unsigned modulus = 2;
  std::vector<unsigned> w_right, w_up;
};

using DoubleCover = CyclicCover;

unsigned holonomy(const CyclicCover &c, const TaxiPath &p);
unsigned holonomy(const CyclicCover &c, const HomologyCycle &cycle);
// Values on the fundamental cycles of CycleSystem(base); equal exactly when
// the cocycles are cohomologous.
std::vector<unsigned> holonomy_signature(const CyclicCover &c);

// Cover whose holonomy is f(c) = <c, gamma> mod n, gamma = sum x_i a_i + y_i b_i
// with gamma given as (x1, y1, x2, y2, ...) over `basis`.
CyclicCover cover_from_dual(const Origami &o, const SymplecticBasis &basis,
                            const std::vector<long long> &gamma, unsigned n);

// The 15 covers over `basis`, ordered by label.
std::vector<DoubleCover> double_covers(const Origami &o, const SymplecticBasis &basis);
std::vector<DoubleCover> all_double_covers(const Origami &o);

// Primitive gamma in (Z/n)^4, ordered by base-n label.
std::vector<CyclicCover> cyclic_covers(const Origami &o, const SymplecticBasis &basis, unsigned n);
std::vector<CyclicCover> cyclic_covers(const Origami &o, unsigned n);

// Squares s + |base| * t for sheet t.
Origami lift(const CyclicCover &c);
Permutation deck_shift(const CyclicCover &c);

struct CoverLabel {
  HomologyVector gamma;
  unsigned label = 0;
};

// gamma = (x1, y1, x2, y2) read from holonomy: x_i = -hol(b_i), y_i = hol(a_i).
CoverLabel cover_label(const Origami &o, const SymplecticBasis &basis, const CyclicCover &c);

std::string to_text(const CyclicCover &c, const SymplecticBasis &basis);

} // namespace echoes
