#include "relwitt/json_io.hpp"

namespace relwitt::io {

namespace {

json elem_json(const Ring& ring, const Elem& e) { return {{"i", e.i}, {"j", e.j}, {"a", ring.format(e.a)}}; }

Elem elem_from(const RingPtr& ring, const json& j) {
  if (!j.is_object() || !j.contains("i") || !j.contains("j") || !j.contains("a")) {
    fail(ErrorCode::ParseError, "elementary token needs i, j and a");
  }
  return Elem{j.at("i").get<std::size_t>(), j.at("j").get<std::size_t>(), ring->parse(element_text(j.at("a")))};
}

}  // namespace

std::string element_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorCode::ParseError, "ring elements are strings or integers, got " + j.dump());
}

std::vector<std::string> string_list(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(element_text(x));
  return out;
}

json to_json(const Matrix& m) {
  return {{"ring", spec_to_json(m.ring()->spec())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.to_strings()}};
}

Matrix matrix_from_json(const RingPtr& ring, const json& j) {
  const json& entries = j.is_object() && j.contains("entries") ? j.at("entries") : j;
  if (!entries.is_array()) fail(ErrorCode::ParseError, "a matrix is an array of rows");
  if (j.is_object() && j.contains("ring") && make_ring(spec_from_json(j.at("ring")))->key() != ring->key()) {
    fail(ErrorCode::RingMismatch, "matrix was written over a different ring");
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : entries) rows.push_back(string_list(r));
  return Matrix::parse(ring, rows);
}

json to_json(const UmRow& v) { return v.to_strings(); }

UmRow row_from_json(const RingPtr& ring, const json& j) { return UmRow::parse(ring, string_list(j)); }

json to_json(const Ring& ring, const Token& t) {
  return std::visit(
      [&](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Elem>) {
          return elem_json(ring, node);
        } else if constexpr (std::is_same_v<T, Conjugated>) {
          json conj = json::array();
          for (const auto& e : node.conjugator) conj.push_back(elem_json(ring, e));
          return {{"conj", conj}, {"core", elem_json(ring, node.core)}};
        } else {
          return {{"inv", to_json(ring, *node.inner)}};
        }
      },
      t.node);
}

Token token_from_json(const RingPtr& ring, const json& j) {
  if (j.is_object() && j.contains("inv")) {
    return Token{Inverse{std::make_shared<const Token>(token_from_json(ring, j.at("inv")))}};
  }
  if (j.is_object() && j.contains("core")) {
    Conjugated c{{}, elem_from(ring, j.at("core"))};
    for (const auto& e : j.value("conj", json::array())) c.conjugator.push_back(elem_from(ring, e));
    return Token{std::move(c)};
  }
  return Token{elem_from(ring, j)};
}

json to_json(const GroupWord& w) {
  json tokens = json::array();
  for (const auto& t : w.tokens()) tokens.push_back(to_json(*w.ring(), t));
  return {{"n", w.size()}, {"tokens", tokens}};
}

GroupWord word_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_object() || !j.contains("n")) fail(ErrorCode::ParseError, "a word needs n and tokens");
  GroupWord w(ring, j.at("n").get<std::size_t>());
  for (const auto& t : j.value("tokens", json::array())) w.push(token_from_json(ring, t));
  return w;
}

json to_json(const EquivalenceCertificate& c) { return {{"t", c.t}, {"epsilon", to_json(c.epsilon)}}; }

EquivalenceCertificate certificate_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("epsilon")) {
    fail(ErrorCode::ParseError, "a certificate needs t and epsilon");
  }
  return {j.at("t").get<std::size_t>(), word_from_json(ring, j.at("epsilon"))};
}

json to_json(const StandardForm& f) { return {{"r", f.r}, {"n", f.n}, {"s1", f.s1}, {"s2", f.s2}}; }

json to_json(const WittSymbol& x) {
  return {{"matrix", to_json(x.rep)}, {"form", to_json(x.form)}, {"ideal", x.ideal.generator_strings()}};
}

}  // namespace relwitt::io
