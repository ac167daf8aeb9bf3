#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relwitt/ideal.hpp"
#include "relwitt/ring.hpp"

namespace relwitt {

/// Dense row-major matrix over one ring.
class Matrix {
 public:
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  static Matrix identity(RingPtr ring, std::size_t n);
  static Matrix parse(RingPtr ring, const std::vector<std::vector<std::string>>& entries);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  /// 0-based access.
  const Value& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Value& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  Element element(std::size_t i, std::size_t j) const { return {ring_, at(i, j)}; }
  const std::vector<Value>& entries() const noexcept { return entries_; }

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix scaled(const Value& s) const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Skew-symmetric with zero diagonal; square implied.
  bool is_alternating() const;
  /// Square with unit determinant.
  bool is_invertible() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> entries_;
};

/// diag(A, B).
Matrix orth_sum(const Matrix& a, const Matrix& b);

/// First-row expansion with memoization over remaining index sets.
/// Throws NotAlternating or OddSize.
Element pfaffian(const Matrix& a);

/// Berkowitz; division free, valid over any commutative ring.
Element determinant(const Matrix& a);

/// chi_r^s1 (+) chi_(n-r)^s2 with chi^-1 = -chi.
struct StandardForm {
  std::size_t r = 0;
  std::size_t n = 0;
  int s1 = 1;
  int s2 = 1;
  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

/// chi_n, the orthogonal sum of n copies of [[0,1],[-1,0]].
Matrix chi(const RingPtr& ring, std::size_t n);
/// Throws BadIndices when r > n or a sign is not +-1.
Matrix chi(const RingPtr& ring, const StandardForm& form);

/// Every entry of A - identity lies in I.
bool in_congruence_level(const Matrix& a, const Ideal& ideal);
/// Every entry of A - B lies in I.
bool congruent_mod_ideal(const Matrix& a, const Matrix& b, const Ideal& ideal);

}  // namespace relwitt
