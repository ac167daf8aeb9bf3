#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "relwitt/ideal.hpp"
#include "relwitt/matrix.hpp"

namespace relwitt {

/// e_ij(a) = identity + a at (i, j); indices are 1-based.
struct Elem {
  std::size_t i = 1;
  std::size_t j = 2;
  Value a;
  friend bool operator==(const Elem&, const Elem&) = default;
};

struct Token;

/// g e g^-1 where g is the product of `conjugator` in order.
struct Conjugated {
  std::vector<Elem> conjugator;
  Elem core;
  friend bool operator==(const Conjugated&, const Conjugated&) = default;
};

struct Inverse {
  std::shared_ptr<const Token> inner;
  friend bool operator==(const Inverse& a, const Inverse& b);
};

struct Token {
  std::variant<Elem, Conjugated, Inverse> node;
  friend bool operator==(const Token&, const Token&) = default;
};

/// Structural inverse: negated cores, the same conjugators.
Token inverse_token(const Ring& ring, const Token& t);

/// A word in elementary generators of GL_n. The syntax is kept because
/// membership in the relative group is a property of the word.
class GroupWord {
 public:
  GroupWord(RingPtr ring, std::size_t n, std::vector<Token> tokens = {});

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }

  GroupWord& push(Token t);
  GroupWord& push(Elem e) { return push(Token{std::move(e)}); }
  GroupWord& append(const GroupWord& other);

  /// Product of the generators in token order. Throws IndexOutOfRange.
  Matrix evaluate() const;
  /// m * word, applied as column operations.
  void apply_right(Matrix& m) const;

  /// Every core coefficient lies in I.
  bool relative_level(const Ideal& ideal) const;

  /// Reversed tokens, each inverted.
  GroupWord inverse() const;
  /// The same word acting on the first n coordinates of a larger space.
  GroupWord resized(std::size_t n) const;
  /// Indices moved up by `offset`, in a space of size n.
  GroupWord shifted(std::size_t offset, std::size_t n) const;

 private:
  void check(const Elem& e) const;

  RingPtr ring_;
  std::size_t n_;
  std::vector<Token> tokens_;
};

}  // namespace relwitt
