#include "echoes/lshape.hpp"

#include <stdexcept>

namespace echoes {

namespace {

void check_parameters(Decomposition which, long long b, long long e)
{
  if (b < 1 || e < -1 || e > 1 || e + 1 >= b || (e == 1 && b % 2))
    throw std::invalid_argument("L(b, e) needs b >= 1, e in {-1,0,1}, e + 1 < b, b even when e = 1");
  switch (which) {
  case Decomposition::horizontal:
  case Decomposition::vertical:
    return;
  case Decomposition::slope:
    if (e != 1 || b <= 6)
      throw std::invalid_argument("slope 2/b decomposition needs e = 1 and b > 6");
    return;
  case Decomposition::script_slope:
    if (b % 4)
      throw std::invalid_argument("slope 2/(b-2) decomposition needs b = 0 mod 4");
    [[fallthrough]];
  case Decomposition::script_horizontal:
  case Decomposition::script_vertical:
    if (e != 1 || b <= 2)
      throw std::invalid_argument("the second L model needs e = 1 and b > 2");
    return;
  }
}

bool is_script(Decomposition which)
{
  return which == Decomposition::script_horizontal || which == Decomposition::script_vertical ||
         which == Decomposition::script_slope;
}

bool is_vertical(Decomposition which)
{
  return which == Decomposition::vertical || which == Decomposition::script_vertical;
}

Vec4 add(const Vec4 &a, const Vec4 &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

} // namespace

PlanarPeriod PlanarPeriod::operator+(const PlanarPeriod &o) const
{
  return {horizontal + o.horizontal, vertical + o.vertical};
}

PlanarPeriod PlanarPeriod::operator*(const PlanarPeriod &o) const
{
  return {horizontal * o.horizontal - vertical * o.vertical,
          horizontal * o.vertical + vertical * o.horizontal};
}

PlanarPeriod l_period(const Vec4 &x, long long b, long long e, LShape model)
{
  QuadraticElement lam = QuadraticElement::lambda(b, e);
  QuadraticElement width(b, b, e);
  if (model == LShape::script_L) {
    lam = lam - QuadraticElement(2, b, e);
    width = width - QuadraticElement(2, b, e);
  }
  auto q = [&](long long k) { return QuadraticElement(k, b, e); };
  return {q(x[0]) * lam + q(x[2]) * width, q(x[1]) * lam + q(x[3])};
}

CylinderModulus cylinder_modulus(const PlanarPeriod &core, const PlanarPeriod &crossing)
{
  QuadraticElement len2 = core.horizontal * core.horizontal + core.vertical * core.vertical;
  if (len2.is_zero())
    throw std::invalid_argument("cylinder_modulus: zero core period");
  QuadraticElement im = crossing.vertical * core.horizontal - crossing.horizontal * core.vertical;
  QuadraticElement m = im / len2;
  int s = m.sign();
  if (s == 0)
    throw std::invalid_argument("cylinder_modulus: crossing is parallel to the core");
  return {s > 0 ? m : -m, s};
}

std::vector<CylinderData> cylinders(Decomposition which, long long b, long long e)
{
  check_parameters(which, b, e);
  const Vec4 a1{1, 0, 0, 0}, b1{0, 1, 0, 0}, a2{0, 0, 1, 0}, b2{0, 0, 0, 1};
  std::vector<std::pair<Vec4, Vec4>> classes;
  switch (which) {
  case Decomposition::horizontal:
  case Decomposition::script_horizontal:
    classes = {{a1, b1}, {a2, b2}};
    break;
  case Decomposition::vertical:
  case Decomposition::script_vertical:
    classes = {{add(b1, b2), a1}, {b2, Vec4{-1, 0, 1, 0}}};
    break;
  case Decomposition::slope:
  case Decomposition::script_slope: {
    const long long w = which == Decomposition::slope ? b : b - 2;
    const Vec4 alpha{0, 0, 1, 2}, beta{w / 2, 1, 0, 0};
    classes = {{alpha, Vec4{1, 0, 0, 1}}, {add(alpha, beta), Vec4{1, 0, 0, 0}}};
    break;
  }
  }
  const LShape model = is_script(which) ? LShape::script_L : LShape::L;
  std::vector<CylinderData> out;
  for (const auto &[core, crossing] : classes) {
    PlanarPeriod pc = l_period(core, b, e, model), px = l_period(crossing, b, e, model);
    out.push_back({core, crossing, pc, px, cylinder_modulus(pc, px).value});
  }
  return out;
}

Rational modulus_ratio(Decomposition which, long long b, long long e)
{
  auto cyl = cylinders(which, b, e);
  QuadraticElement r = is_vertical(which) ? cyl[1].modulus / cyl[0].modulus
                                          : cyl[0].modulus / cyl[1].modulus;
  if (!r.is_rational())
    throw std::logic_error("modulus_ratio: ratio has a nonzero lambda part");
  return r.x();
}

std::pair<long long, long long> twist_powers(const Rational &r)
{
  if (r <= 0)
    throw std::invalid_argument("twist_powers: ratio must be positive");
  return {static_cast<long long>(boost::multiprecision::numerator(r)),
          static_cast<long long>(boost::multiprecision::denominator(r))};
}

std::pair<long long, long long> twist_powers(const QuadraticElement &r)
{
  if (!r.is_rational())
    throw std::invalid_argument("twist_powers: ratio is not rational");
  return twist_powers(r.x());
}

IntMatrix4 multitwist_matrix(const std::vector<std::pair<Vec4, long long>> &cores, TwistSense sense)
{
  const IntMatrix4 &j = IntMatrix4::symplectic_form();
  const long long s = sense == TwistSense::right ? 1 : -1;
  IntMatrix4 m = IntMatrix4::identity();
  for (const auto &[c, k] : cores) {
    if (k == 0)
      throw std::invalid_argument("multitwist_matrix: zero power");
    IntMatrix4 cc;
    for (int r = 0; r < 4; ++r)
      for (int t = 0; t < 4; ++t)
        cc.m[r][t] = c[r] * c[t];
    m = (IntMatrix4::identity() + (cc * j).scaled(s * k)) * m;
  }
  return m;
}

IntMatrix4 decomposition_twist(Decomposition which, long long b, long long e)
{
  auto cyl = cylinders(which, b, e);
  auto [k1, k2] = twist_powers(cyl[0].modulus / cyl[1].modulus);
  return multitwist_matrix({{cyl[0].core_class, k1}, {cyl[1].core_class, k2}},
                           is_vertical(which) ? TwistSense::left : TwistSense::right);
}

ResidueMatrix4 diagonal_twist_mod2(long long b, long long e)
{
  Decomposition which;
  if (e == 1 && b % 4 == 2 && b > 6)
    which = Decomposition::slope;
  else if (e == 1 && b % 4 == 0 && b > 2)
    which = Decomposition::script_slope;
  else
    throw std::invalid_argument("diagonal_twist_mod2 needs e = 1 and b = 2 mod 4 with b > 6, or b = 0 mod 4");
  return ResidueMatrix4(decomposition_twist(which, b, e), 2);
}

} // namespace echoes
