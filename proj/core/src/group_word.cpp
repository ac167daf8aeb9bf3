#include "relwitt/group_word.hpp"

#include <functional>

namespace relwitt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Elem negated(const Ring& R, const Elem& e) { return {e.i, e.j, R.neg(e.a)}; }

// m <- m * e_ij(a): column j += a * column i.
void column_op(const Ring& R, Matrix& m, const Elem& e) {
  if (R.is_zero(e.a)) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Value& x = m.at(r, e.i - 1);
    if (R.is_zero(x)) continue;
    m.at(r, e.j - 1) = R.add(m.at(r, e.j - 1), R.mul(x, e.a));
  }
}

void apply_token(const Ring& R, Matrix& m, const Token& t) {
  std::visit(Overloaded{
                 [&](const Elem& e) { column_op(R, m, e); },
                 [&](const Conjugated& c) {
                   for (const auto& g : c.conjugator) column_op(R, m, g);
                   column_op(R, m, c.core);
                   for (auto it = c.conjugator.rbegin(); it != c.conjugator.rend(); ++it) {
                     column_op(R, m, negated(R, *it));
                   }
                 },
                 [&](const Inverse& inv) { apply_token(R, m, inverse_token(R, *inv.inner)); },
             },
             t.node);
}

Elem relabel(const Elem& e, std::size_t offset) { return {e.i + offset, e.j + offset, e.a}; }

Token relabel(const Token& t, std::size_t offset) {
  return std::visit(Overloaded{
                        [&](const Elem& e) { return Token{relabel(e, offset)}; },
                        [&](const Conjugated& c) {
                          Conjugated out{{}, relabel(c.core, offset)};
                          for (const auto& g : c.conjugator) out.conjugator.push_back(relabel(g, offset));
                          return Token{std::move(out)};
                        },
                        [&](const Inverse& inv) {
                          return Token{Inverse{std::make_shared<const Token>(relabel(*inv.inner, offset))}};
                        },
                    },
                    t.node);
}

}  // namespace

bool operator==(const Inverse& a, const Inverse& b) {
  if (a.inner == b.inner) return true;
  if (!a.inner || !b.inner) return false;
  return *a.inner == *b.inner;
}

Token inverse_token(const Ring& R, const Token& t) {
  return std::visit(Overloaded{
                        [&](const Elem& e) { return Token{negated(R, e)}; },
                        [&](const Conjugated& c) { return Token{Conjugated{c.conjugator, negated(R, c.core)}}; },
                        [&](const Inverse& inv) { return *inv.inner; },
                    },
                    t.node);
}

GroupWord::GroupWord(RingPtr ring, std::size_t n, std::vector<Token> tokens)
    : ring_(std::move(ring)), n_(n) {
  for (auto& t : tokens) push(std::move(t));
}

void GroupWord::check(const Elem& e) const {
  if (e.i < 1 || e.j < 1 || e.i > n_ || e.j > n_ || e.i == e.j) {
    fail(ErrorCode::IndexOutOfRange, "generator e(" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                         ") is invalid in size " + std::to_string(n_));
  }
}

GroupWord& GroupWord::push(Token t) {
  std::visit(Overloaded{
                 [&](const Elem& e) { check(e); },
                 [&](const Conjugated& c) {
                   for (const auto& g : c.conjugator) check(g);
                   check(c.core);
                 },
                 [&](const Inverse& inv) {
                   if (!inv.inner) fail(ErrorCode::IndexOutOfRange, "empty inverse token");
                   GroupWord probe(ring_, n_);
                   probe.push(*inv.inner);
                 },
             },
             t.node);
  tokens_.push_back(std::move(t));
  return *this;
}

GroupWord& GroupWord::append(const GroupWord& other) {
  require_same_ring(*ring_, *other.ring_, "word concatenation");
  if (other.n_ != n_) fail(ErrorCode::SizeMismatch, "word sizes differ");
  for (const auto& t : other.tokens_) tokens_.push_back(t);
  return *this;
}

Matrix GroupWord::evaluate() const {
  Matrix m = Matrix::identity(ring_, n_);
  apply_right(m);
  return m;
}

void GroupWord::apply_right(Matrix& m) const {
  if (m.cols() != n_) fail(ErrorCode::SizeMismatch, "word size does not match the matrix");
  for (const auto& t : tokens_) apply_token(*ring_, m, t);
}

bool GroupWord::relative_level(const Ideal& ideal) const {
  require_same_ring(*ring_, *ideal.ring(), "relative level");
  std::function<bool(const Token&)> ok = [&](const Token& t) {
    return std::visit(Overloaded{
                          [&](const Elem& e) { return ideal.contains(e.a); },
                          [&](const Conjugated& c) { return ideal.contains(c.core.a); },
                          [&](const Inverse& inv) { return ok(*inv.inner); },
                      },
                      t.node);
  };
  for (const auto& t : tokens_) {
    if (!ok(t)) return false;
  }
  return true;
}

GroupWord GroupWord::inverse() const {
  GroupWord out(ring_, n_);
  for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) out.tokens_.push_back(inverse_token(*ring_, *it));
  return out;
}

GroupWord GroupWord::resized(std::size_t n) const {
  if (n < n_) fail(ErrorCode::SizeMismatch, "cannot shrink a word");
  GroupWord out(ring_, n);
  out.tokens_ = tokens_;
  return out;
}

GroupWord GroupWord::shifted(std::size_t offset, std::size_t n) const {
  if (n < n_ + offset) fail(ErrorCode::SizeMismatch, "shifted word does not fit");
  GroupWord out(ring_, n);
  for (const auto& t : tokens_) out.tokens_.push_back(relabel(t, offset));
  return out;
}

}  // namespace relwitt
