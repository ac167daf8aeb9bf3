#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relwitt/ring.hpp"

// Dense univariate coefficient arithmetic over an arbitrary base ring. Used by
// the polynomial, Laurent, quotient and Rees rings and by the polynomial tools.
namespace relwitt::upoly {

using Coeffs = std::vector<Value>;

void trim(const Ring& base, Coeffs& c);
Coeffs add(const Ring& base, const Coeffs& a, const Coeffs& b);
Coeffs neg(const Ring& base, const Coeffs& a);
Coeffs sub(const Ring& base, const Coeffs& a, const Coeffs& b);
Coeffs mul(const Ring& base, const Coeffs& a, const Coeffs& b);
Coeffs scale(const Ring& base, const Coeffs& a, const Value& s);
Coeffs pow(const Ring& base, const Coeffs& a, std::uint64_t k);

/// Degree of a trimmed coefficient list; -1 for the zero polynomial.
long degree(const Coeffs& c);

/// Division by a divisor whose leading coefficient is a unit.
std::pair<Coeffs, Coeffs> divmod(const Ring& base, const Coeffs& f, const Coeffs& g);

/// Exact division over Z: the quotient when g divides f in Z[X].
std::optional<Coeffs> exact_divide_integers(const Coeffs& f, const Coeffs& g);

/// Monic gcd over a field.
Coeffs gcd_over_field(const Ring& base, Coeffs a, Coeffs b);

/// Evaluation at a point of the base ring.
Value evaluate(const Ring& base, const Coeffs& c, const Value& x);

/// Terms printed from the highest exponent down, e.g. `3*t^2-t+1`.
/// `low` is the exponent of c[0]. Coefficients of composite base rings are
/// bracketed: `[X+1]*t`.
std::string format(const Ring& base, const Coeffs& c, std::int64_t low, std::string_view var);

struct Parsed {
  Coeffs coeffs;
  std::int64_t low = 0;
};
/// Inverse of `format`. Negative exponents are accepted only when
/// `allow_negative` is set.
Parsed parse(const Ring& base, std::string_view text, std::string_view var, bool allow_negative);

/// Normalizes a Laurent coefficient list: strips zeros at both ends.
void normalize_laurent(const Ring& base, Coeffs& c, std::int64_t& low);

}  // namespace relwitt::upoly
