#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relwitt/ring.hpp"

namespace relwitt::text {

std::string strip_spaces(std::string_view s);
bool is_integer_literal(std::string_view s);
Integer parse_integer(std::string_view s);
std::string to_string(const Integer& n);

/// Splits at `sep` characters that are not nested inside () or [].
std::vector<std::string> split_top_level(std::string_view s, char sep);

/// `(a|b|c)` -> {"a","b","c"}; fails with ParseError when not parenthesized.
std::vector<std::string> split_tuple(std::string_view s);

}  // namespace relwitt::text
