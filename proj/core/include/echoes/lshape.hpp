#pragma once

#include <utility>
#include <vector>

#include "echoes/matrix4.hpp"
#include "echoes/quadratic.hpp"

namespace echoes {

// horizontal + i vertical
struct PlanarPeriod {
  QuadraticElement horizontal, vertical;

  PlanarPeriod operator+(const PlanarPeriod &o) const;
  PlanarPeriod operator*(const PlanarPeriod &o) const;
  PlanarPeriod conj() const { return {horizontal, -vertical}; }
  friend bool operator==(const PlanarPeriod &, const PlanarPeriod &) = default;
};

// L(b, e): top square of side lambda over a b x 1 rectangle. The second model
// (e = 1 only) has square side lambda - 2 and rectangle width b - 2.
enum class LShape { L, script_L };

PlanarPeriod l_period(const Vec4 &x, long long b, long long e, LShape model = LShape::L);

struct CylinderModulus {
  QuadraticElement value; // > 0
  int orientation;        // sign of Im(crossing conj(core))
};

// Im(crossing conj(core)) / |core|^2, made positive.
CylinderModulus cylinder_modulus(const PlanarPeriod &core, const PlanarPeriod &crossing);

enum class Decomposition {
  horizontal,
  vertical,
  slope,           // slope 2/b on L(b, 1)
  script_horizontal,
  script_vertical,
  script_slope     // slope 2/(b-2) on the second model
};

struct CylinderData {
  Vec4 core_class, crossing_class;
  PlanarPeriod core_period, crossing_period;
  QuadraticElement modulus;
};

// The two cylinders C1, C2 of the decomposition.
std::vector<CylinderData> cylinders(Decomposition which, long long b, long long e);

// m2/m1 for the vertical cases and m1/m2 otherwise; throws unless rational.
Rational modulus_ratio(Decomposition which, long long b, long long e);

// (k1, k2) = m1/m2 in lowest terms.
std::pair<long long, long long> twist_powers(const Rational &m1_over_m2);
std::pair<long long, long long> twist_powers(const QuadraticElement &m1_over_m2);

// right: x -> x + k <c, x> c. The vertical twist acts in the left sense.
enum class TwistSense { right, left };

IntMatrix4 multitwist_matrix(const std::vector<std::pair<Vec4, long long>> &cores,
                             TwistSense sense = TwistSense::right);

// Multitwist of the decomposition, powers from the modulus ratio.
IntMatrix4 decomposition_twist(Decomposition which, long long b, long long e);

// Slope decomposition twist mod 2: L(b, 1) with b = 2 mod 4, b > 6, or the
// second model with b = 0 mod 4.
ResidueMatrix4 diagonal_twist_mod2(long long b, long long e);

} // namespace echoes
