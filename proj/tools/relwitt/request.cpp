#include "request.hpp"

#include "relwitt/json_io.hpp"

namespace relwitt::cli {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

json Request::get(const std::string& key) const {
  if (!has(key)) throw UsageError("missing --" + key);
  const json& v = values_.at(key);
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (!s.empty() && (s.front() == '[' || s.front() == '{')) {
      try {
        return json::parse(s);
      } catch (const json::parse_error& e) {
        throw UsageError("--" + key + " is not valid JSON: " + e.what());
      }
    }
  }
  return v;
}

std::optional<json> Request::find(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return get(key);
}

std::string Request::text(const std::string& key) const {
  json v = get(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  return v.dump();
}

std::string Request::text(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

std::size_t Request::count(const std::string& key, std::size_t fallback) const {
  if (!has(key)) return fallback;
  json v = get(key);
  try {
    if (v.is_number_unsigned() || v.is_number_integer()) {
      long long x = v.get<long long>();
      if (x < 0) throw UsageError("--" + key + " must be non-negative");
      return static_cast<std::size_t>(x);
    }
    if (v.is_string()) return static_cast<std::size_t>(std::stoull(v.get<std::string>()));
  } catch (const std::logic_error&) {
  }
  throw UsageError("--" + key + " must be a non-negative integer");
}

bool Request::flag(const std::string& key) const {
  if (!has(key)) return false;
  json v = get(key);
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) return v.get<std::string>() == "true" || v.get<std::string>() == "1";
  return v.is_number() && v.get<double>() != 0;
}

RingPtr Request::ring(const std::string& key) const {
  json v = get(key);
  if (v.is_object()) return make_ring(spec_from_json(v));
  return make_ring(parse_ring_spec(text(key)));
}

Ideal Request::ideal(const RingPtr& ring, const std::string& key) const {
  json v = get(key);
  if (v.is_array()) return Ideal::parse(ring, io::string_list(v));
  return Ideal::parse(ring, split_commas(text(key)));
}

std::optional<Ideal> Request::optional_ideal(const RingPtr& ring, const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return ideal(ring, key);
}

}  // namespace relwitt::cli
