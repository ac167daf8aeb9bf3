#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "relwitt/ideal.hpp"
#include "relwitt/ring.hpp"

namespace relwitt::cli {

using nlohmann::json;

/// A missing or malformed argument; reported with exit code 64.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Merged view of the JSON config file and the flags given on the command
/// line, keyed by long flag name without dashes. Flags win.
class Request {
 public:
  explicit Request(json values) : values_(std::move(values)) {}

  bool has(const std::string& key) const { return values_.contains(key) && !values_.at(key).is_null(); }
  /// Flag text that looks like JSON is decoded; other text stays a string.
  json get(const std::string& key) const;
  std::optional<json> find(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  std::size_t count(const std::string& key, std::size_t fallback) const;
  bool flag(const std::string& key) const;

  RingPtr ring(const std::string& key = "ring") const;
  /// Comma separated generators, a JSON list, `unit` or `zero`.
  Ideal ideal(const RingPtr& ring, const std::string& key = "ideal") const;
  std::optional<Ideal> optional_ideal(const RingPtr& ring, const std::string& key = "ideal") const;

 private:
  json values_;
};

}  // namespace relwitt::cli
