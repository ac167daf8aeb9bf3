#include "relwitt/intmath.hpp"

namespace relwitt {

Integer floor_mod(const Integer& a, const Integer& n) {
  Integer m = n < 0 ? Integer(-n) : n;
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = a < 0 ? Integer(-a) : a;
  Integer y = b < 0 ? Integer(-b) : b;
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace relwitt
