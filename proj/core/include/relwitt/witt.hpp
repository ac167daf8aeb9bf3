#pragma once

#include <optional>
#include <utility>

#include "relwitt/group_word.hpp"
#include "relwitt/ideal.hpp"
#include "relwitt/matrix.hpp"

namespace relwitt {

/// Scans r = 0..n and the sign pairs (+,+), (+,-), (-,+), (-,-) for the first
/// standard form congruent to `a` modulo I.
std::optional<StandardForm> standard_form_witness(const Matrix& a, const Ideal& ideal);

/// An invertible alternating matrix congruent to a standard form mod I.
struct WittSymbol {
  Ideal ideal;
  Matrix rep;
  StandardForm form;

  const RingPtr& ring() const noexcept { return rep.ring(); }
  /// Half the matrix size.
  std::size_t half() const noexcept { return rep.rows() / 2; }
};

/// Validates the representative and finds its form witness. Throws
/// NotAlternating, NotAUnit or NotStandardForm.
WittSymbol make_symbol(Matrix rep, const Ideal& ideal);

/// alpha (+) chi_(n+t) = eps^T (beta (+) chi_(m+t)) eps, with alpha of size 2m
/// and beta of size 2n; eps acts on size 2(m+n+t).
struct EquivalenceCertificate {
  std::size_t t = 0;
  GroupWord epsilon;
};

/// Throws SizeMismatch when the word has the wrong size.
bool verify_equivalence(const WittSymbol& alpha, const WittSymbol& beta, const EquivalenceCertificate& cert);

/// A certificate for (beta, alpha) from one for (alpha, beta).
EquivalenceCertificate reverse_certificate(const EquivalenceCertificate& cert);

/// From certificates for alpha ~ beta and beta ~ gamma, one for alpha ~ gamma.
EquivalenceCertificate compose_certificates(const WittSymbol& alpha, const WittSymbol& beta,
                                            const WittSymbol& gamma, const EquivalenceCertificate& ab,
                                            const EquivalenceCertificate& bc);

/// [alpha].[beta] = [alpha (+) beta].
WittSymbol witt_product(const WittSymbol& x, const WittSymbol& y);

/// Pf of the representative. Throws NotAUnit when it is not a unit.
Element pf_unit(const WittSymbol& x);

/// [[0, a], [-a, 0]] for a unit a with a - 1 in I. Throws NotInC.
WittSymbol split_section(const Element& a, const Ideal& ideal);

/// Entry (i,j) becomes (s_ij, alpha_ij - s_ij) over R (+) I, s = chi(form).
Matrix tilde_lift_alt(const WittSymbol& x);

/// The pair matrix (chi(form), rep) over the double ring.
Matrix map_i(const WittSymbol& x);
/// First components of a matrix over a double ring.
Matrix map_p1(const Matrix& p);

/// M_n(D) -> pairs of matrices over R, and back.
std::pair<Matrix, Matrix> split_pair_matrix(const Matrix& p);
Matrix join_pair_matrix(const RingPtr& double_ring, const Matrix& a, const Matrix& b);

/// Nilpotency is searched up to this many times the matrix size over
/// infinite rings.
inline constexpr std::size_t kNilpotencyCapFactor = 64;

/// The m-th root identity + sum_k C(1/m, k) N^k of gamma = identity + N.
/// Throws NotUnipotent or NonInvertibleIndex.
Matrix unipotent_root(const Matrix& gamma, std::uint64_t m);

/// Checks that l has X-degree at most one with degree-one coefficients in the
/// ideal, then verifies the certificate. Throws NotLinear.
bool karoubi_linear_verify(const WittSymbol& x, const Matrix& l, const EquivalenceCertificate& cert);

}  // namespace relwitt
