#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relwitt/ideal.hpp"
#include "relwitt/ring.hpp"
#include "relwitt/upoly.hpp"

namespace relwitt {

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial in X1..Xd over a coefficient ring.
class MPoly {
 public:
  MPoly(RingPtr ring, std::size_t nvars);

  static MPoly constant(RingPtr ring, std::size_t nvars, const Value& c);
  /// X_k, 1-based.
  static MPoly variable(RingPtr ring, std::size_t nvars, std::size_t k);
  /// Univariate coefficients placed on X1.
  static MPoly in_x1(RingPtr ring, std::size_t nvars, const upoly::Coeffs& c);
  /// Terms such as `2*X1^2*X2 + X3 - 1`.
  static MPoly parse(RingPtr ring, std::size_t nvars, std::string_view text);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Value>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& e, const Value& c);

  MPoly& operator+=(const MPoly& b);
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  MPoly scaled(const Value& s) const;
  MPoly pow(std::uint64_t k) const;

  /// Replaces X_k by images[k-1].
  MPoly substitute(const std::vector<MPoly>& images) const;

  /// Largest exponent of X1; -1 for zero.
  long degree_x1() const;
  /// Monic in X1: the top X1 power occurs in one term, X1^D alone, with coefficient 1.
  bool is_monic_x1() const;

  std::string format() const;

 private:
  RingPtr ring_;
  std::size_t nvars_;
  std::map<Exponents, Value> terms_;
};

/// X1 -> X1, X_i -> X_i + phi(X1)^(r_i) for i >= 2.
struct Substitution {
  RingPtr field;
  std::size_t nvars = 0;
  upoly::Coeffs phi;
  std::vector<std::uint64_t> r;  // r_2 .. r_d

  /// The images of X1..Xd; with `inverse` the signs are flipped.
  std::vector<MPoly> images(bool inverse = false) const;
  MPoly apply(const MPoly& f, bool inverse = false) const;
};

struct NagataResult {
  Substitution substitution;
  std::uint64_t m = 0;
  Value c;
  MPoly h;
};

/// With m = 1 + max{n i_k} and r_j = m^(j-1), the substituted f equals c*h
/// with h monic in X1. Throws ZeroPolynomial. Every step is checked.
NagataResult nagata_transform(const MPoly& f, const upoly::Coeffs& phi);

/// f monic and every other coefficient in M. `f` lives in S[X] with S the
/// ring of M.
bool is_weierstrass(const Element& f, const Ideal& m);

}  // namespace relwitt
