#include "echoes/rational.hpp"

namespace echoes {

std::string to_string(const Rational &q)
{
  BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  if (d == 1)
    return n.str();
  return n.str() + "/" + d.str();
}

} // namespace echoes
