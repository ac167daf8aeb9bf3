#include "commands.hpp"

#include "relwitt/json_io.hpp"
#include "relwitt/matrix.hpp"
#include "relwitt/orbit.hpp"
#include "relwitt/poly_tools.hpp"
#include "relwitt/report.hpp"
#include "relwitt/tower.hpp"
#include "relwitt/unimodular.hpp"
#include "relwitt/witt.hpp"

namespace relwitt::cli {

namespace {

const OptionSpec kRing{"ring", "ring spec: int, rat, zmod:N, gf:Q, comma separated factors, or JSON"};
const OptionSpec kIdeal{"ideal", "ideal generators, comma separated or JSON; `unit` or `zero`"};
const OptionSpec kDepth{"conj-depth", "conjugation depth of relative generators (default 2)"};
const OptionSpec kBound{"bound", "largest orbit explored"};
const OptionSpec kStab{"stab", "stabilization level L"};

json ring_json(const RingPtr& r) { return spec_to_json(r->spec()); }

json element_or_null(const RingPtr& r, const std::optional<Value>& v) {
  return v ? json(r->format(*v)) : json(nullptr);
}

WittSymbol symbol_arg(const Request& req, const RingPtr& R, const Ideal& I, const std::string& key) {
  return make_symbol(io::matrix_from_json(R, req.get(key)), I);
}

GroupWord word_arg(const Request& req, const RingPtr& R, const std::string& key) {
  json w = req.get(key);
  if (w.is_array()) {
    json obj{{"n", req.count("n", 0)}, {"tokens", w}};
    if (obj["n"] == 0) throw UsageError("a bare token list needs --n");
    return io::word_from_json(R, obj);
  }
  return io::word_from_json(R, w);
}

json partition_json(const OrbitPartition& P) {
  ObjectCodec codec(FiniteRing::of(P.ring), P.action, P.n);
  json orbits = json::array();
  for (std::size_t k = 0; k < P.orbit_count(); ++k) {
    json rep = P.action == Action::Row ? io::to_json(codec.to_row(P.representatives[k]))
                                       : io::to_json(codec.to_matrix(P.representatives[k]));
    orbits.push_back({{"representative", rep}, {"size", P.sizes[k]}, {"saturated", static_cast<bool>(P.orbit_saturated[k])}});
  }
  return {{"schema", "relwitt.orbit/1"},
          {"ring", ring_json(P.ring)},
          {"action", P.action == Action::Row ? "row" : "congruence"},
          {"n", P.n},
          {"generators", P.generators},
          {"bound", P.bound},
          {"objects", P.objects.size()},
          {"orbits", orbits},
          {"saturated", P.saturated}};
}

Outcome ring_eval(const Request& req) {
  RingPtr R = req.ring();
  std::string op = req.text("op", "parse");
  json out{{"ring", ring_json(R)}, {"op", op}};
  auto a = [&] { return R->parse(req.text("a")); };
  auto b = [&] { return R->parse(req.text("b")); };
  if (op == "parse") {
    out["result"] = R->format(a());
  } else if (op == "add") {
    out["result"] = R->format(R->add(a(), b()));
  } else if (op == "sub") {
    out["result"] = R->format(R->sub(a(), b()));
  } else if (op == "mul") {
    out["result"] = R->format(R->mul(a(), b()));
  } else if (op == "neg") {
    out["result"] = R->format(R->neg(a()));
  } else if (op == "pow") {
    out["result"] = R->format(R->pow(a(), req.count("k", 1)));
  } else if (op == "inverse") {
    out["result"] = element_or_null(R, R->inverse(a()));
  } else if (op == "is_unit") {
    out["result"] = R->is_unit(a());
  } else if (op == "elements") {
    json list = json::array();
    for (const auto& x : R->elements()) list.push_back(R->format(x));
    out["result"] = list;
  } else if (op == "cardinality") {
    out["result"] = R->cardinality();
  } else {
    throw UsageError("unknown --op " + op);
  }
  return {out};
}

Outcome ideal_members(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.ideal(R);
  json out{{"ring", ring_json(R)}, {"generators", I.generator_strings()}, {"unit", I.is_unit_ideal()}};
  if (I.has_closure()) {
    json members = json::array();
    for (const auto& x : I.closure()) members.push_back(R->format(x));
    out["members"] = members;
  }
  if (req.has("contains")) out["contains"] = I.contains(R->parse(req.text("contains")));
  return {out};
}

Outcome poly_nagata(const Request& req) {
  RingPtr K = req.ring();
  std::size_t d = req.count("nvars", 2);
  MPoly f = MPoly::parse(K, d, req.text("f"));
  MPoly phi_m = MPoly::parse(K, 1, req.text("phi", "X1"));
  upoly::Coeffs phi;
  for (const auto& [e, c] : phi_m.terms()) {
    if (phi.size() <= e[0]) phi.resize(e[0] + 1, K->zero());
    phi[e[0]] = c;
  }
  NagataResult r = nagata_transform(f, phi);
  json rs = json::array();
  for (auto x : r.substitution.r) rs.push_back(x);
  MPoly g = r.substitution.apply(f);
  return {json{{"ring", ring_json(K)},
               {"f", f.format()},
               {"m", r.m},
               {"r", rs},
               {"substituted", g.format()},
               {"c", K->format(r.c)},
               {"h", r.h.format()},
               {"h_monic", r.h.is_monic_x1()}}};
}

Outcome mat_pf(const Request& req) {
  RingPtr R = req.ring();
  return {json{{"pfaffian", pfaffian(io::matrix_from_json(R, req.get("matrix"))).str()}}};
}

Outcome mat_det(const Request& req) {
  RingPtr R = req.ring();
  return {json{{"determinant", determinant(io::matrix_from_json(R, req.get("matrix"))).str()}}};
}

Outcome word_eval(const Request& req) {
  RingPtr R = req.ring();
  GroupWord w = word_arg(req, R, "word");
  json out{{"n", w.size()}, {"matrix", io::to_json(w.evaluate())}};
  if (auto I = req.optional_ideal(R)) out["relative"] = w.relative_level(*I);
  return {out};
}

Outcome witt_verify(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.ideal(R);
  WittSymbol a = symbol_arg(req, R, I, "alpha");
  WittSymbol b = symbol_arg(req, R, I, "beta");
  EquivalenceCertificate c = io::certificate_from_json(R, req.get("cert"));
  return {json{{"verified", verify_equivalence(a, b, c)}, {"alpha", io::to_json(a)}, {"beta", io::to_json(b)}}};
}

Outcome witt_product_cmd(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.ideal(R);
  WittSymbol p = witt_product(symbol_arg(req, R, I, "alpha"), symbol_arg(req, R, I, "beta"));
  return {json{{"product", io::to_json(p)}, {"pfaffian", pf_unit(p).str()}}};
}

Outcome witt_lift(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.ideal(R);
  WittSymbol a = symbol_arg(req, R, I, "alpha");
  Matrix t = tilde_lift_alt(a);
  Matrix d = map_i(a);
  return {json{{"excision_ring", ring_json(t.ring())},
               {"tilde", io::to_json(t)},
               {"double_ring", ring_json(d.ring())},
               {"map_i", io::to_json(d)},
               {"map_p1", io::to_json(map_p1(d))}}};
}

Outcome witt_root(const Request& req) {
  RingPtr R = req.ring();
  Matrix g = io::matrix_from_json(R, req.get("matrix"));
  std::size_t m = req.count("m", 2);
  Matrix root = unipotent_root(g, m);
  Matrix p = Matrix::identity(R, g.rows());
  for (std::size_t k = 0; k < m; ++k) p = p * root;
  return {json{{"root", io::to_json(root)}, {"m", m}, {"verified", p == g}}};
}

Outcome um_complete(const Request& req) {
  RingPtr R = req.ring();
  UmRow v = io::row_from_json(R, req.get("row"));
  std::optional<UmRow> b;
  if (auto I = req.optional_ideal(R)) {
    b = complete_relative(v, *I);
  } else {
    b = complete(v);
  }
  return {json{{"row", io::to_json(v)}, {"completion", b ? io::to_json(*b) : json(nullptr)}}};
}

Outcome um_theta(const Request& req) {
  RingPtr R = req.ring();
  UmRow a = io::row_from_json(R, req.get("a"));
  UmRow b = io::row_from_json(R, req.get("b"));
  Matrix t = theta(a, b);
  return {json{{"theta", io::to_json(t)}, {"pfaffian", pfaffian(t).str()}}};
}

Outcome um_symbol(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.ideal(R);
  UmRow v = io::row_from_json(R, req.get("row"));
  auto a = complete_relative(v, I);
  WittSymbol s = vaserstein_symbol(v, I);
  return {json{{"row", io::to_json(v)}, {"completion", io::to_json(*a)}, {"symbol", io::to_json(s)}}};
}

Outcome um_vdk(const Request& req) {
  RingPtr R = req.ring();
  UmRow u = io::row_from_json(R, req.get("u"));
  UmRow v = io::row_from_json(R, req.get("v"));
  auto I = req.optional_ideal(R);
  bool same_tail = u.size() == v.size() && std::equal(u.entries.begin() + 1, u.entries.end(), v.entries.begin() + 1);
  UmRow p = u;
  json out{{"u", io::to_json(u)}, {"v", io::to_json(v)}};
  if (same_tail || !R->is_finite()) {
    p = vdk_product(u, v, I);
  } else {
    OrbitPartition P = um_orbits(R, u.size(), I, req.count("conj-depth", 2), req.count("bound", kDefaultOrbitBound));
    p = vdk_product(u, v, P, I);
    ObjectCodec codec(FiniteRing::of(R), Action::Row, u.size());
    auto o = P.orbit_of(codec.from_row(p));
    out["orbit_representative"] = o ? io::to_json(codec.to_row(P.representatives[*o])) : json(nullptr);
  }
  out["product"] = io::to_json(p);
  return {out};
}

Outcome um_lift(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.ideal(R);
  UmRow v = io::row_from_json(R, req.get("row"));
  UmRow lift = tilde_row_lift(v, I, req.flag("integer-base"));
  return {json{{"excision_ring", ring_json(lift.ring)},
               {"lift", io::to_json(lift)},
               {"image", io::to_json(excision_map_f(lift))}}};
}

Outcome orbit_um(const Request& req) {
  RingPtr R = req.ring();
  auto I = req.optional_ideal(R);
  return {partition_json(um_orbits(R, req.count("n", 3), I, req.count("conj-depth", 2),
                                   req.count("bound", kDefaultOrbitBound)))};
}

Outcome orbit_alt(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.has("ideal") ? req.ideal(R) : Ideal::unit(R);
  WittFamily W = witt_classes_bounded(R, I, req.count("n", 2), req.count("stab", 0), req.count("conj-depth", 2),
                                      req.count("bound", kDefaultOrbitBound));
  json out = partition_json(W.level0);
  json levels = json::array();
  for (const auto& l : W.levels) {
    levels.push_back({{"t", l.t},
                      {"classes", l.classes},
                      {"explored", l.explored},
                      {"generators", l.generators},
                      {"generators_saturated", l.generators_saturated},
                      {"saturated", l.saturated},
                      {"skipped", l.skipped}});
  }
  json classes = json::array();
  for (auto c : W.class_of) classes.push_back(c);
  out["levels"] = levels;
  out["class_of_orbit"] = classes;
  out["classes"] = W.class_count();
  return {out};
}

Outcome report_vaserstein(const Request& req) {
  RingPtr R = req.ring();
  Ideal I = req.has("ideal") ? req.ideal(R) : Ideal::unit(R);
  ReportOptions opt;
  opt.depth = req.count("conj-depth", 2);
  opt.stabilization = req.count("stab", 1);
  opt.bound = req.count("bound", kDefaultOrbitBound);
  BijectivityReport rep = vaserstein_report(R, I, opt);
  return {rep.body, rep.verdict == Verdict::Refuted ? 2 : 0};
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"ring", "eval", "evaluate ring arithmetic",
       {kRing, {"op", "parse, add, sub, mul, neg, pow, inverse, is_unit, elements, cardinality"},
        {"a", "first operand"}, {"b", "second operand"}, {"k", "exponent for pow"}},
       ring_eval},
      {"ideal", "members", "list the members of an ideal of a finite ring",
       {kRing, kIdeal, {"contains", "element to test"}}, ideal_members},
      {"poly", "nagata", "substitution making a polynomial monic in X1",
       {kRing, {"nvars", "number of variables"}, {"f", "polynomial in X1..Xd"}, {"phi", "monic polynomial in X1"}},
       poly_nagata},
      {"mat", "pf", "Pfaffian of an alternating matrix", {kRing, {"matrix", "JSON rows"}}, mat_pf},
      {"mat", "det", "determinant", {kRing, {"matrix", "JSON rows"}}, mat_det},
      {"", "pf", "Pfaffian of an alternating matrix", {kRing, {"matrix", "JSON rows"}}, mat_pf},
      {"", "det", "determinant", {kRing, {"matrix", "JSON rows"}}, mat_det},
      {"word", "eval", "evaluate an elementary word",
       {kRing, {"word", "JSON word or token list"}, {"n", "size for a bare token list"}, kIdeal}, word_eval},
      {"witt", "verify", "check an equivalence certificate",
       {kRing, kIdeal, {"alpha", "JSON matrix"}, {"beta", "JSON matrix"}, {"cert", "JSON certificate"}}, witt_verify},
      {"witt", "product", "orthogonal sum of two symbols",
       {kRing, kIdeal, {"alpha", "JSON matrix"}, {"beta", "JSON matrix"}}, witt_product_cmd},
      {"witt", "lift", "lifts of a symbol to the excision and double rings",
       {kRing, kIdeal, {"alpha", "JSON matrix"}}, witt_lift},
      {"witt", "root", "m-th root of a unipotent matrix", {kRing, {"matrix", "JSON rows"}, {"m", "root index"}},
       witt_root},
      {"um", "complete", "completion of a unimodular row", {kRing, {"row", "JSON row"}, kIdeal}, um_complete},
      {"um", "theta", "the 4x4 matrix of a completed pair", {kRing, {"a", "JSON row"}, {"b", "JSON row"}}, um_theta},
      {"um", "symbol", "Vaserstein symbol of a relative row", {kRing, kIdeal, {"row", "JSON row"}}, um_symbol},
      {"um", "vdk", "van der Kallen product of two rows",
       {kRing, {"u", "JSON row"}, {"v", "JSON row"}, kIdeal, kDepth, kBound}, um_vdk},
      {"um", "lift", "lift of a relative row to the excision ring",
       {kRing, kIdeal, {"row", "JSON row"}, {"integer-base", "lift to Z (+) I", true}}, um_lift},
      {"orbit", "um", "orbits of unimodular rows",
       {kRing, {"n", "row length"}, kIdeal, kDepth, kBound}, orbit_um},
      {"orbit", "alt", "congruence classes of alternating matrices",
       {kRing, {"n", "half the matrix size"}, kIdeal, kDepth, kStab, kBound}, orbit_alt},
      {"report", "vaserstein", "bounded bijectivity report", {kRing, kIdeal, kDepth, kStab, kBound},
       report_vaserstein},
  };
  return table;
}

}  // namespace relwitt::cli
