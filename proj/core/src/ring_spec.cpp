#include <limits>

#include "relwitt/ring.hpp"
#include "text_util.hpp"

namespace relwitt {

namespace {

constexpr RingKind kAllKinds[] = {
    RingKind::Integers, RingKind::Rationals, RingKind::Modular,  RingKind::Polynomial,
    RingKind::Laurent,  RingKind::Quotient,  RingKind::Product,  RingKind::Excision,
    RingKind::Double,   RingKind::Rees,      RingKind::ExtendedRees,
};

RingKind kind_from_name(std::string_view name) {
  for (RingKind k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  fail(ErrorCode::MalformedSpec, "unknown ring kind '" + std::string(name) + "'");
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name)) fail(ErrorCode::MalformedSpec, std::string("ring spec is missing '") + name + "'");
  return j.at(name);
}

std::vector<std::string> string_list(const nlohmann::json& j, const char* name) {
  const auto& v = field(j, name);
  if (v.is_string()) return {v.get<std::string>()};
  if (!v.is_array()) fail(ErrorCode::MalformedSpec, std::string("'") + name + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (x.is_string()) {
      out.push_back(x.get<std::string>());
    } else if (x.is_number_integer()) {
      out.push_back(std::to_string(x.get<long long>()));
    } else {
      fail(ErrorCode::MalformedSpec, std::string("'") + name + "' entries must be strings");
    }
  }
  return out;
}

std::string var_or(const nlohmann::json& j, const char* fallback) {
  if (!j.contains("var")) return fallback;
  if (!j.at("var").is_string()) fail(ErrorCode::MalformedSpec, "'var' must be a string");
  return j.at("var").get<std::string>();
}

}  // namespace

std::string_view kind_name(RingKind kind) noexcept {
  switch (kind) {
    case RingKind::Integers: return "integers";
    case RingKind::Rationals: return "rationals";
    case RingKind::Modular: return "modular";
    case RingKind::Polynomial: return "polynomial";
    case RingKind::Laurent: return "laurent";
    case RingKind::Quotient: return "quotient";
    case RingKind::Product: return "product";
    case RingKind::Excision: return "excision";
    case RingKind::Double: return "double";
    case RingKind::Rees: return "rees";
    case RingKind::ExtendedRees: return "extended_rees";
  }
  return "unknown";
}

RingSpec RingSpec::integers() { return {}; }

RingSpec RingSpec::rationals() {
  RingSpec s;
  s.kind = RingKind::Rationals;
  return s;
}

RingSpec RingSpec::modular(Integer n) {
  RingSpec s;
  s.kind = RingKind::Modular;
  s.modulus = std::move(n);
  return s;
}

RingSpec RingSpec::polynomial(RingSpec base, std::string var) {
  RingSpec s;
  s.kind = RingKind::Polynomial;
  s.var = std::move(var);
  s.children.push_back(std::move(base));
  return s;
}

RingSpec RingSpec::laurent(RingSpec base, std::string var) {
  RingSpec s = polynomial(std::move(base), std::move(var));
  s.kind = RingKind::Laurent;
  return s;
}

RingSpec RingSpec::quotient(RingSpec base, std::vector<std::string> modulus) {
  RingSpec s;
  s.kind = RingKind::Quotient;
  s.children.push_back(std::move(base));
  s.generators = std::move(modulus);
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = RingKind::Product;
  s.children = std::move(factors);
  return s;
}

RingSpec RingSpec::excision(RingSpec base, std::vector<std::string> ideal) {
  RingSpec s;
  s.kind = RingKind::Excision;
  s.children.push_back(std::move(base));
  s.generators = std::move(ideal);
  return s;
}

RingSpec RingSpec::integer_excision(RingSpec ambient, std::vector<std::string> ideal) {
  RingSpec s = excision(integers(), std::move(ideal));
  s.ambient.push_back(std::move(ambient));
  return s;
}

RingSpec RingSpec::double_ring(RingSpec base, std::vector<std::string> ideal) {
  RingSpec s = excision(std::move(base), std::move(ideal));
  s.kind = RingKind::Double;
  return s;
}

RingSpec RingSpec::rees(RingSpec base, std::vector<std::string> ideal, std::string var) {
  RingSpec s = excision(std::move(base), std::move(ideal));
  s.kind = RingKind::Rees;
  s.var = std::move(var);
  return s;
}

RingSpec RingSpec::extended_rees(RingSpec base, std::vector<std::string> ideal, std::string var) {
  RingSpec s = rees(std::move(base), std::move(ideal), std::move(var));
  s.kind = RingKind::ExtendedRees;
  return s;
}

RingSpec RingSpec::galois(unsigned q) {
  auto over = [](unsigned p, const char* modulus) {
    return quotient(polynomial(modular(p), "X"), {modulus});
  };
  switch (q) {
    case 4: return over(2, "X^2+X+1");
    case 8: return over(2, "X^3+X+1");
    case 9: return over(3, "X^2+1");
    default: break;
  }
  if (q < 2) fail(ErrorCode::MalformedSpec, "no field with " + std::to_string(q) + " elements");
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) fail(ErrorCode::MalformedSpec, "gf:" + std::to_string(q) + " is not supported");
  }
  return modular(q);
}

nlohmann::json spec_to_json(const RingSpec& spec) {
  nlohmann::json j;
  j["kind"] = std::string(kind_name(spec.kind));
  switch (spec.kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
      break;
    case RingKind::Modular:
      if (spec.modulus <= Integer(std::numeric_limits<long long>::max())) {
        j["n"] = static_cast<long long>(spec.modulus);
      } else {
        j["n"] = spec.modulus.str();
      }
      break;
    case RingKind::Polynomial:
    case RingKind::Laurent:
      j["base"] = spec_to_json(spec.children.at(0));
      j["var"] = spec.var;
      break;
    case RingKind::Quotient:
      j["base"] = spec_to_json(spec.children.at(0));
      j["modulus"] = spec.generators;
      break;
    case RingKind::Product: {
      auto factors = nlohmann::json::array();
      for (const auto& c : spec.children) factors.push_back(spec_to_json(c));
      j["factors"] = factors;
      break;
    }
    case RingKind::Excision:
    case RingKind::Double:
      j["base"] = spec_to_json(spec.children.at(0));
      j["ideal"] = spec.generators;
      if (!spec.ambient.empty()) j["ambient"] = spec_to_json(spec.ambient.front());
      break;
    case RingKind::Rees:
    case RingKind::ExtendedRees:
      j["base"] = spec_to_json(spec.children.at(0));
      j["ideal"] = spec.generators;
      j["var"] = spec.var;
      break;
  }
  return j;
}

RingSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::MalformedSpec, "ring spec must be an object");
  const auto& kind_field = field(j, "kind");
  if (!kind_field.is_string()) fail(ErrorCode::MalformedSpec, "'kind' must be a string");
  RingKind kind = kind_from_name(kind_field.get<std::string>());
  switch (kind) {
    case RingKind::Integers: return RingSpec::integers();
    case RingKind::Rationals: return RingSpec::rationals();
    case RingKind::Modular: {
      const auto& n = field(j, "n");
      if (n.is_number_integer()) return RingSpec::modular(Integer(n.get<long long>()));
      if (n.is_string()) return RingSpec::modular(text::parse_integer(n.get<std::string>()));
      fail(ErrorCode::MalformedSpec, "'n' must be an integer");
    }
    case RingKind::Polynomial:
      return RingSpec::polynomial(spec_from_json(field(j, "base")), var_or(j, "X"));
    case RingKind::Laurent:
      return RingSpec::laurent(spec_from_json(field(j, "base")), var_or(j, "t"));
    case RingKind::Quotient:
      return RingSpec::quotient(spec_from_json(field(j, "base")), string_list(j, "modulus"));
    case RingKind::Product: {
      const auto& f = field(j, "factors");
      if (!f.is_array()) fail(ErrorCode::MalformedSpec, "'factors' must be a list");
      std::vector<RingSpec> factors;
      for (const auto& x : f) factors.push_back(spec_from_json(x));
      return RingSpec::product(std::move(factors));
    }
    case RingKind::Excision: {
      RingSpec s = RingSpec::excision(spec_from_json(field(j, "base")), string_list(j, "ideal"));
      if (j.contains("ambient")) s.ambient.push_back(spec_from_json(j.at("ambient")));
      return s;
    }
    case RingKind::Double:
      return RingSpec::double_ring(spec_from_json(field(j, "base")), string_list(j, "ideal"));
    case RingKind::Rees:
      return RingSpec::rees(spec_from_json(field(j, "base")), string_list(j, "ideal"), var_or(j, "t"));
    case RingKind::ExtendedRees:
      return RingSpec::extended_rees(spec_from_json(field(j, "base")), string_list(j, "ideal"),
                                     var_or(j, "t"));
  }
  fail(ErrorCode::MalformedSpec, "unknown ring kind");
}

namespace {

RingSpec parse_single(const std::string& s) {
  if (s == "int" || s == "Z") return RingSpec::integers();
  if (s == "rat" || s == "Q") return RingSpec::rationals();
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string head = s.substr(0, colon);
    std::string tail = s.substr(colon + 1);
    if (!text::is_integer_literal(tail)) fail(ErrorCode::MalformedSpec, "bad ring shorthand '" + s + "'");
    Integer n = text::parse_integer(tail);
    if (head == "zmod") return RingSpec::modular(n);
    if (head == "gf") {
      if (n < 2 || n > 1000000) fail(ErrorCode::MalformedSpec, "bad field size in '" + s + "'");
      return RingSpec::galois(static_cast<unsigned>(n));
    }
  }
  fail(ErrorCode::MalformedSpec, "bad ring shorthand '" + s + "'");
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text_in) {
  std::string s = text::strip_spaces(text_in);
  if (s.empty()) fail(ErrorCode::MalformedSpec, "empty ring spec");
  if (s.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::MalformedSpec, std::string("ring spec is not valid JSON: ") + e.what());
    }
    return spec_from_json(j);
  }
  auto parts = text::split_top_level(s, ',');
  if (parts.size() == 1) return parse_single(parts.front());
  std::vector<RingSpec> factors;
  for (const auto& p : parts) factors.push_back(parse_single(p));
  return RingSpec::product(std::move(factors));
}

}  // namespace relwitt
