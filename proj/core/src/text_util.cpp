#include "text_util.hpp"

#include <cctype>

namespace relwitt::text {

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) fail(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  bool negative = s.front() == '-';
  if (s.front() == '-' || s.front() == '+') s.remove_prefix(1);
  Integer n{std::string(s)};
  return negative ? Integer(-n) : n;
}

std::string to_string(const Integer& n) { return n.str(); }

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) fail(ErrorCode::ParseError, "unbalanced brackets in '" + std::string(s) + "'");
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (depth != 0) fail(ErrorCode::ParseError, "unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(cur);
  return out;
}

std::vector<std::string> split_tuple(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    fail(ErrorCode::ParseError, "expected '(a|b|...)', got '" + std::string(s) + "'");
  }
  // The outer parentheses must enclose the whole string.
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && i + 1 < s.size()) {
      fail(ErrorCode::ParseError, "expected '(a|b|...)', got '" + std::string(s) + "'");
    }
  }
  return split_top_level(s.substr(1, s.size() - 2), '|');
}

}  // namespace relwitt::text
