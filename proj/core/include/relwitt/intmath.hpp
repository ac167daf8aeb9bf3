#pragma once

#include <tuple>

#include "relwitt/ring.hpp"

namespace relwitt {

/// Remainder in [0, |n|).
Integer floor_mod(const Integer& a, const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

struct ExtGcd {
  Integer g;  // gcd, non-negative
  Integer x;  // g = x*a + y*b
  Integer y;
};
ExtGcd ext_gcd(const Integer& a, const Integer& b);

}  // namespace relwitt
