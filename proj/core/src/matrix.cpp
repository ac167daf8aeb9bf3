#include "relwitt/matrix.hpp"

#include <unordered_map>

namespace relwitt {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_->zero()) {}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) fail(ErrorCode::ShapeMismatch, "entry count does not match the shape");
}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ring_->one();
  return m;
}

Matrix Matrix::parse(RingPtr ring, const std::vector<std::vector<std::string>>& entries) {
  std::size_t rows = entries.size();
  std::size_t cols = rows == 0 ? 0 : entries.front().size();
  std::vector<Value> values;
  values.reserve(rows * cols);
  for (const auto& row : entries) {
    if (row.size() != cols) fail(ErrorCode::ShapeMismatch, "matrix rows have different lengths");
    for (const auto& e : row) values.push_back(ring->parse(e));
  }
  return {std::move(ring), rows, cols, std::move(values)};
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.entries_) e = ring_->neg(e);
  return m;
}

Matrix Matrix::scaled(const Value& s) const {
  Matrix m = *this;
  for (auto& e : m.entries_) e = ring_->mul(s, e);
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(*a.ring_, *b.ring_, "matrix addition");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::ShapeMismatch, "matrix addition shapes differ");
  Matrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.ring_->add(a.entries_[k], b.entries_[k]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(*a.ring_, *b.ring_, "matrix product");
  if (a.cols_ != b.rows_) fail(ErrorCode::ShapeMismatch, "matrix product shapes do not chain");
  const Ring& R = *a.ring_;
  Matrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Value& x = a.at(i, k);
      if (R.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) = R.add(m.at(i, j), R.mul(x, b.at(k, j)));
    }
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return same_ring(*a.ring_, *b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool Matrix::is_alternating() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!ring_->is_zero(at(i, i))) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(j, i) != ring_->neg(at(i, j))) return false;
    }
  }
  return true;
}

bool Matrix::is_invertible() const { return is_square() && determinant(*this).is_unit(); }

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(ring_->format(at(i, j)));
  }
  return out;
}

Matrix orth_sum(const Matrix& a, const Matrix& b) {
  require_same_ring(*a.ring(), *b.ring(), "orthogonal sum");
  if (!a.is_square() || !b.is_square()) fail(ErrorCode::ShapeMismatch, "orthogonal sum needs square matrices");
  std::size_t n = a.rows() + b.rows();
  Matrix m(a.ring(), n, n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.rows() + j) = b.at(i, j);
  }
  return m;
}

namespace {

class PfaffianExpander {
 public:
  explicit PfaffianExpander(const Matrix& a) : a_(a), R_(*a.ring()) {}

  Value run(std::uint64_t mask) {
    if (mask == 0) return R_.one();
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::size_t first = lowest(mask);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
    Value sum = R_.zero();
    std::size_t position = 1;
    for (std::size_t j = first + 1; j < a_.rows(); ++j) {
      if ((rest >> j & 1U) == 0) continue;
      ++position;
      const Value& x = a_.at(first, j);
      if (R_.is_zero(x)) continue;
      Value term = R_.mul(x, run(rest & ~(std::uint64_t{1} << j)));
      sum = position % 2 == 0 ? R_.add(sum, term) : R_.sub(sum, term);
    }
    memo_.emplace(mask, sum);
    return sum;
  }

 private:
  static std::size_t lowest(std::uint64_t mask) {
    std::size_t k = 0;
    while ((mask >> k & 1U) == 0) ++k;
    return k;
  }

  const Matrix& a_;
  const Ring& R_;
  std::unordered_map<std::uint64_t, Value> memo_;
};

}  // namespace

Element pfaffian(const Matrix& a) {
  if (!a.is_square() || !a.is_alternating()) fail(ErrorCode::NotAlternating, "Pfaffian needs an alternating matrix");
  if (a.rows() % 2 != 0) fail(ErrorCode::OddSize, "Pfaffian needs even size");
  if (a.rows() > 62) fail(ErrorCode::TooLarge, "Pfaffian size limit exceeded");
  std::uint64_t all = a.rows() == 0 ? 0 : (std::uint64_t{1} << a.rows()) - 1;
  PfaffianExpander ex(a);
  return {a.ring(), ex.run(all)};
}

Element determinant(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::ShapeMismatch, "determinant needs a square matrix");
  const Ring& R = *a.ring();
  const std::size_t n = a.rows();
  // p holds det(xI - A_k) coefficients from x^k down to the constant term.
  std::vector<Value> p{R.one()};
  for (std::size_t k = 0; k < n; ++k) {
    // A_(k+1) = [[A_k, S], [Rw, a_kk]]; column of the Toeplitz factor.
    std::vector<Value> col{R.one(), R.neg(a.at(k, k))};
    std::vector<Value> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = a.at(i, k);
    for (std::size_t power = 0; power + 1 <= k; ++power) {
      Value rs = R.zero();
      for (std::size_t i = 0; i < k; ++i) rs = R.add(rs, R.mul(a.at(k, i), s[i]));
      col.push_back(R.neg(rs));
      std::vector<Value> next(k, R.zero());
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) next[i] = R.add(next[i], R.mul(a.at(i, j), s[j]));
      }
      s = std::move(next);
    }
    std::vector<Value> q(k + 2, R.zero());
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] = R.add(q[i], R.mul(col[i - j], p[j]));
    }
    p = std::move(q);
  }
  Value c = p.back();
  return {a.ring(), n % 2 == 0 ? c : R.neg(c)};
}

Matrix chi(const RingPtr& ring, std::size_t n) { return chi(ring, StandardForm{0, n, 1, 1}); }

Matrix chi(const RingPtr& ring, const StandardForm& form) {
  if (form.r > form.n) fail(ErrorCode::BadIndices, "standard form needs r <= n");
  if ((form.s1 != 1 && form.s1 != -1) || (form.s2 != 1 && form.s2 != -1)) {
    fail(ErrorCode::BadIndices, "standard form signs must be +1 or -1");
  }
  Matrix m(ring, 2 * form.n, 2 * form.n);
  for (std::size_t b = 0; b < form.n; ++b) {
    int s = b < form.r ? form.s1 : form.s2;
    Value one = ring->one();
    Value minus = ring->neg(one);
    m.at(2 * b, 2 * b + 1) = s > 0 ? one : minus;
    m.at(2 * b + 1, 2 * b) = s > 0 ? minus : one;
  }
  return m;
}

bool in_congruence_level(const Matrix& a, const Ideal& ideal) {
  if (!a.is_square()) fail(ErrorCode::ShapeMismatch, "congruence level needs a square matrix");
  return congruent_mod_ideal(a, Matrix::identity(a.ring(), a.rows()), ideal);
}

bool congruent_mod_ideal(const Matrix& a, const Matrix& b, const Ideal& ideal) {
  require_same_ring(*a.ring(), *b.ring(), "congruence");
  require_same_ring(*a.ring(), *ideal.ring(), "congruence");
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "congruence shapes differ");
  const Ring& R = *a.ring();
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (!ideal.contains(R.sub(a.entries()[k], b.entries()[k]))) return false;
  }
  return true;
}

}  // namespace relwitt
