#include "relwitt/witt.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "relwitt/tower.hpp"

namespace relwitt {

namespace {

constexpr std::pair<int, int> kSignOrder[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

// Merges adjacent blocks of equal sign; a standard form has at most two.
std::optional<StandardForm> collapse(const std::vector<std::pair<std::size_t, int>>& blocks) {
  std::vector<std::pair<std::size_t, int>> merged;
  for (const auto& [len, sign] : blocks) {
    if (len == 0) continue;
    if (!merged.empty() && merged.back().second == sign) {
      merged.back().first += len;
    } else {
      merged.emplace_back(len, sign);
    }
  }
  if (merged.empty()) return StandardForm{0, 0, 1, 1};
  if (merged.size() == 1) return StandardForm{0, merged[0].first, 1, merged[0].second};
  if (merged.size() == 2) {
    return StandardForm{merged[0].first, merged[0].first + merged[1].first, merged[0].second, merged[1].second};
  }
  return std::nullopt;
}

Value rational_in_ring(const Ring& R, const boost::multiprecision::cpp_rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  auto inv = R.inverse(R.from_integer(den));
  if (!inv) fail(ErrorCode::NonInvertibleIndex, den.str() + " is not invertible in " + R.key());
  return R.mul(R.from_integer(num), *inv);
}

}  // namespace

std::optional<StandardForm> standard_form_witness(const Matrix& a, const Ideal& ideal) {
  if (!a.is_square() || a.rows() % 2 != 0) return std::nullopt;
  std::size_t n = a.rows() / 2;
  for (std::size_t r = 0; r <= n; ++r) {
    for (const auto& [s1, s2] : kSignOrder) {
      StandardForm f{r, n, s1, s2};
      if (congruent_mod_ideal(a, chi(a.ring(), f), ideal)) return f;
    }
  }
  return std::nullopt;
}

WittSymbol make_symbol(Matrix rep, const Ideal& ideal) {
  require_same_ring(*rep.ring(), *ideal.ring(), "Witt symbol");
  if (!rep.is_alternating()) fail(ErrorCode::NotAlternating, "Witt symbol needs an alternating matrix");
  if (rep.rows() % 2 != 0) fail(ErrorCode::OddSize, "Witt symbol needs even size");
  if (!determinant(rep).is_unit()) fail(ErrorCode::NotAUnit, "Witt symbol needs an invertible matrix");
  auto form = standard_form_witness(rep, ideal);
  if (!form) fail(ErrorCode::NotStandardForm, "matrix is not congruent to a standard form");
  return {ideal, std::move(rep), *form};
}

bool verify_equivalence(const WittSymbol& alpha, const WittSymbol& beta, const EquivalenceCertificate& cert) {
  require_same_ring(*alpha.ring(), *beta.ring(), "equivalence");
  require_same_ring(*alpha.ring(), *cert.epsilon.ring(), "equivalence");
  std::size_t m = alpha.half();
  std::size_t n = beta.half();
  std::size_t total = 2 * (m + n + cert.t);
  if (cert.epsilon.size() != total) {
    fail(ErrorCode::SizeMismatch, "certificate word has size " + std::to_string(cert.epsilon.size()) +
                                      ", expected " + std::to_string(total));
  }
  if (!cert.epsilon.relative_level(alpha.ideal)) return false;
  const RingPtr& R = alpha.ring();
  Matrix lhs = orth_sum(alpha.rep, chi(R, n + cert.t));
  Matrix e = cert.epsilon.evaluate();
  Matrix rhs = e.transpose() * orth_sum(beta.rep, chi(R, m + cert.t)) * e;
  return lhs == rhs;
}

EquivalenceCertificate reverse_certificate(const EquivalenceCertificate& cert) {
  return {cert.t, cert.epsilon.inverse()};
}

EquivalenceCertificate compose_certificates(const WittSymbol& alpha, const WittSymbol& beta,
                                            const WittSymbol& gamma, const EquivalenceCertificate& ab,
                                            const EquivalenceCertificate& bc) {
  using I = long long;
  I a = static_cast<I>(alpha.half());
  I b = static_cast<I>(beta.half());
  I c = static_cast<I>(gamma.half());
  I t1 = static_cast<I>(ab.t);
  I t2 = static_cast<I>(bc.t);
  I k = std::max<I>({0, c + t2 - a - t1, c - b - t1});
  I t = b + t1 + k - c;
  std::size_t total = static_cast<std::size_t>(2 * (a + c + t));
  GroupWord eps = bc.epsilon.resized(total);
  eps.append(ab.epsilon.resized(total));
  return {static_cast<std::size_t>(t), std::move(eps)};
}

WittSymbol witt_product(const WittSymbol& x, const WittSymbol& y) {
  require_same_ring(*x.ring(), *y.ring(), "Witt product");
  Matrix rep = orth_sum(x.rep, y.rep);
  auto form = collapse({{x.form.r, x.form.s1},
                        {x.form.n - x.form.r, x.form.s2},
                        {y.form.r, y.form.s1},
                        {y.form.n - y.form.r, y.form.s2}});
  if (!form || !congruent_mod_ideal(rep, chi(rep.ring(), *form), x.ideal)) form = standard_form_witness(rep, x.ideal);
  if (!form) fail(ErrorCode::NotStandardForm, "orthogonal sum has no standard form witness");
  return {x.ideal, std::move(rep), *form};
}

Element pf_unit(const WittSymbol& x) {
  Element p = pfaffian(x.rep);
  if (!p.is_unit()) fail(ErrorCode::NotAUnit, "Pfaffian " + p.str() + " is not a unit");
  return p;
}

WittSymbol split_section(const Element& a, const Ideal& ideal) {
  require_same_ring(*a.ring(), *ideal.ring(), "split section");
  const RingPtr& R = a.ring();
  if (!a.is_unit()) fail(ErrorCode::NotInC, a.str() + " is not a unit");
  if (!ideal.contains(a - integer_element(R, 1))) fail(ErrorCode::NotInC, a.str() + " is not 1 modulo the ideal");
  Matrix rep(R, 2, 2);
  rep.at(0, 1) = a.value();
  rep.at(1, 0) = R->neg(a.value());
  return make_symbol(std::move(rep), ideal);
}

Matrix tilde_lift_alt(const WittSymbol& x) {
  const RingPtr& R = x.ring();
  RingPtr E = excision_ring(R, x.ideal);
  Matrix s = chi(R, x.form);
  std::size_t n = x.rep.rows();
  Matrix out(E, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element sij = s.element(i, j);
      out.at(i, j) = excision_element(E, sij, x.rep.element(i, j) - sij).value();
    }
  }
  return out;
}

Matrix map_i(const WittSymbol& x) { return join_pair_matrix(double_ring(x.ring(), x.ideal), chi(x.ring(), x.form), x.rep); }

Matrix map_p1(const Matrix& p) { return split_pair_matrix(p).first; }

std::pair<Matrix, Matrix> split_pair_matrix(const Matrix& p) {
  if (p.ring()->kind() != RingKind::Double) fail(ErrorCode::RingMismatch, "expected a matrix over a double ring");
  RingPtr R = tower_base(*p.ring());
  Matrix a(R, p.rows(), p.cols());
  Matrix b(R, p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      a.at(i, j) = p.at(i, j).parts.at(0);
      b.at(i, j) = p.at(i, j).parts.at(1);
    }
  }
  return {std::move(a), std::move(b)};
}

Matrix join_pair_matrix(const RingPtr& double_ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "pair matrix shapes differ");
  Matrix out(double_ring, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.at(i, j) = double_element(double_ring, a.element(i, j), b.element(i, j)).value();
    }
  }
  return out;
}

Matrix unipotent_root(const Matrix& gamma, std::uint64_t m) {
  if (!gamma.is_square()) fail(ErrorCode::ShapeMismatch, "root needs a square matrix");
  if (m == 0) fail(ErrorCode::NonInvertibleIndex, "root index must be positive");
  const RingPtr& R = gamma.ring();
  if (!R->is_unit(R->from_integer(Integer(m)))) {
    fail(ErrorCode::NonInvertibleIndex, std::to_string(m) + " is not invertible in " + R->key());
  }
  std::size_t n = gamma.rows();
  Matrix id = Matrix::identity(R, n);
  Matrix nil = gamma - id;
  Matrix zero(R, n, n);
  // powers[k] = N^k; stop at the first vanishing power. Over a finite ring
  // a repeated power proves N is not nilpotent; elsewhere the search is capped.
  std::vector<Matrix> powers{id};
  const std::size_t cap = R->is_finite() ? 0 : kNilpotencyCapFactor * std::max<std::size_t>(n, 1);
  while (!(powers.back() == zero)) {
    Matrix next = powers.back() * nil;
    bool repeated = false;
    for (std::size_t k = 1; k < powers.size() && !repeated; ++k) repeated = powers[k] == next;
    if (repeated || (cap != 0 && powers.size() > cap)) {
      fail(ErrorCode::NotUnipotent, "gamma - identity is not nilpotent");
    }
    powers.push_back(std::move(next));
  }
  using boost::multiprecision::cpp_rational;
  cpp_rational exponent(1, static_cast<long long>(m));
  cpp_rational coeff = 1;
  Matrix delta = zero;
  for (std::size_t k = 0; k + 1 < powers.size(); ++k) {
    if (k > 0) coeff = coeff * (exponent - cpp_rational(static_cast<long long>(k - 1))) / cpp_rational(static_cast<long long>(k));
    delta = delta + powers[k].scaled(rational_in_ring(*R, coeff));
  }
  return delta;
}

bool karoubi_linear_verify(const WittSymbol& x, const Matrix& l, const EquivalenceCertificate& cert) {
  require_same_ring(*x.ring(), *l.ring(), "linear representative");
  if (l.ring()->kind() != RingKind::Polynomial) fail(ErrorCode::NotLinear, "linear representative needs R[X]");
  for (const auto& e : l.entries()) {
    if (e.parts.size() > 2) fail(ErrorCode::NotLinear, "entry " + l.ring()->format(e) + " has degree above one");
    if (e.parts.size() == 2) {
      Value constant;
      constant.parts = {e.parts[1]};
      if (!x.ideal.contains(constant)) fail(ErrorCode::NotLinear, "degree-one coefficient is not in the ideal");
    }
  }
  WittSymbol ls = make_symbol(l, x.ideal);
  return verify_equivalence(x, ls, cert);
}

}  // namespace relwitt
