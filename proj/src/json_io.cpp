#include "l5/json_io.hpp"

namespace l5 {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidStructure(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_field(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InvalidStructure(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::vector<Element>> table_field(const Json& j, std::size_t n, const char* what) {
  std::vector<std::vector<Element>> t;
  if (!j.is_array() || j.size() != n) throw InvalidStructure(std::string(what) + " must be an n x n table");
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw InvalidStructure(std::string(what) + " must be an n x n table");
    std::vector<Element> r;
    for (const auto& v : row) r.push_back(static_cast<Element>(index_field(v, what)));
    t.push_back(std::move(r));
  }
  return t;
}

Json set_json(Mask m) {
  Json a = Json::array();
  for (auto i : members(m)) a.push_back(i);
  return a;
}

Mask set_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw InvalidStructure(std::string(what) + " must be a list of indices");
  Mask m = 0;
  for (const auto& v : j) {
    std::size_t i = index_field(v, what);
    if (i >= n) throw InvalidStructure(std::string(what) + " mentions index " + std::to_string(i) + " out of range");
    m |= bit(i);
  }
  return m;
}

}  // namespace

Json to_json(const HeytingAlgebra& h) {
  Json j;
  j["size"] = h.size();
  j["leq"] = h.leq_table();
  j["bot"] = h.bot();
  j["top"] = h.top();
  return j;
}

Json to_json(const L5Model& m) {
  Json j = to_json(m.algebra());
  j["ultrafilter"] = set_json(m.true_set());
  return j;
}

RawTables raw_tables_from_json(const Json& j) {
  RawTables r;
  r.size = index_field(field(j, "size"), "size");
  if (r.size > kMaxMaskSize) throw InvalidStructure("at most 64 elements are supported");
  const Json& leq = field(j, "leq");
  if (!leq.is_array() || leq.size() != r.size) throw InvalidStructure("leq must be an n x n table");
  for (const auto& row : leq) {
    if (!row.is_array() || row.size() != r.size) throw InvalidStructure("leq must be an n x n table");
    std::vector<bool> out;
    for (const auto& v : row) {
      if (!v.is_boolean() && !v.is_number_integer()) throw InvalidStructure("leq entries must be booleans");
      out.push_back(v.is_boolean() ? v.get<bool>() : v.get<int>() != 0);
    }
    r.leq.push_back(std::move(out));
  }
  r.bot = static_cast<Element>(index_field(field(j, "bot"), "bot"));
  r.top = static_cast<Element>(index_field(field(j, "top"), "top"));
  if (j.contains("meet")) r.meet = table_field(j.at("meet"), r.size, "meet");
  if (j.contains("join")) r.join = table_field(j.at("join"), r.size, "join");
  if (j.contains("impl")) r.impl = table_field(j.at("impl"), r.size, "impl");
  return r;
}

HeytingAlgebra algebra_from_json(const Json& j) { return HeytingAlgebra::from_raw(raw_tables_from_json(j)); }

L5Model model_from_json(const Json& j) {
  HeytingAlgebra h = algebra_from_json(j);
  Mask u = set_from_json(field(j, "ultrafilter"), h.size(), "ultrafilter");
  return make_l5_model(std::move(h), u);
}

Json to_json(const KripkeFrame& f) {
  Json j;
  j["worlds"] = f.size();
  Json order = Json::array();
  for (const auto& [a, b] : f.cover_pairs()) order.push_back({a, b});
  j["order"] = order;
  j["bottom"] = f.bottom();
  j["maximal"] = set_json(f.maximal());
  return j;
}

RawFrame raw_frame_from_json(const Json& j) {
  RawFrame r;
  r.worlds = index_field(field(j, "worlds"), "worlds");
  const Json& order = field(j, "order");
  if (!order.is_array()) throw InvalidStructure("order must be a list of pairs");
  for (const auto& p : order) {
    if (!p.is_array() || p.size() != 2) throw InvalidStructure("order must be a list of pairs");
    r.order.emplace_back(static_cast<World>(index_field(p[0], "world")), static_cast<World>(index_field(p[1], "world")));
  }
  return r;
}

KripkeFrame frame_from_json(const Json& j) { return KripkeFrame::from_raw(raw_frame_from_json(j)); }

Json to_json(const FrameAssignment& g) {
  Json j = Json::object();
  for (const auto& [v, s] : g.values().entries()) j[v.name()] = set_json(s);
  return j;
}

Json to_json(const AlgebraAssignment& gamma) {
  Json j = Json::object();
  for (const auto& [v, e] : gamma.entries()) j[v.name()] = e;
  return j;
}

FrameAssignment frame_assignment_from_json(const KripkeFrame& f, const Json& j) {
  if (!j.is_object()) throw InvalidStructure("assignment must be an object");
  VarMap<WorldSet> values;
  for (const auto& [name, val] : j.items()) {
    if (!is_identifier(name)) throw InvalidStructure("'" + name + "' is not a variable name");
    values.set(Var(name), set_from_json(val, f.size(), "assignment"));
  }
  return FrameAssignment(f, std::move(values));
}

AlgebraAssignment algebra_assignment_from_json(const HeytingAlgebra& h, const Json& j) {
  if (!j.is_object()) throw InvalidStructure("assignment must be an object");
  AlgebraAssignment gamma;
  for (const auto& [name, val] : j.items()) {
    if (!is_identifier(name)) throw InvalidStructure("'" + name + "' is not a variable name");
    std::size_t e = index_field(val, "assignment");
    if (e >= h.size()) throw InvalidStructure("assignment for '" + name + "' is out of range");
    gamma.set(Var(name), static_cast<Element>(e));
  }
  return gamma;
}

Json witness_to_json(const Witness& w, const Formula& falsified) {
  Json j;
  if (const auto* k = std::get_if<KripkeWitness>(&w)) {
    j["kind"] = "frame";
    j["formula"] = render(falsified);
    j["frame"] = to_json(k->frame);
    j["assignment"] = to_json(k->g);
    j["world"] = k->world;
  } else {
    const auto& a = std::get<AlgebraWitness>(w);
    j["kind"] = "algebra";
    j["formula"] = render(falsified);
    Json alg = to_json(a.algebra);
    if (a.true_set) alg["ultrafilter"] = set_json(*a.true_set);
    j["algebra"] = alg;
    j["assignment"] = to_json(a.gamma);
    j["value"] = a.value;
  }
  return j;
}

Json to_json(const DecisionOutcome& d, const Formula& f) {
  Json j;
  j["formula"] = render(f);
  j["verdict"] = verdict_name(d.verdict);
  j["complete"] = d.complete;
  j["method"] = d.method;
  if (d.bound_used) j["bound"] = *d.bound_used;
  if (d.witness) j["witness"] = witness_to_json(*d.witness, f);
  if (!d.notes.empty()) j["notes"] = d.notes;
  return j;
}

Json to_json(const PrimeFilterFrame& p, const L5Model& source) {
  Json j;
  j["frame"] = to_json(p.frame);
  j["w_T"] = p.w_top;
  j["assignment"] = to_json(p.g);
  Json worlds = Json::array();
  for (auto f : p.filters) worlds.push_back(set_json(f));
  j["prime_filters"] = worlds;
  // membership[w][e]: element e belongs to the prime filter of world w
  Json matrix = Json::array();
  for (auto f : p.filters) {
    Json row = Json::array();
    for (std::size_t e = 0; e < source.algebra().size(); ++e) row.push_back(has(f, e));
    matrix.push_back(row);
  }
  j["membership"] = matrix;
  j["designated"] = {{"TRUE", set_json(source.true_set())}, {"w_T", p.w_top}};
  return j;
}

Json to_json(const TruthSetModel& t, const KripkeFrame&, World w_top) {
  Json j;
  j["model"] = to_json(t.model);
  j["assignment"] = to_json(t.gamma);
  Json sets = Json::array();
  for (auto s : t.truth_sets) sets.push_back(set_json(s));
  j["truth_sets"] = sets;
  j["designated"] = {{"w_T", w_top}, {"TRUE", set_json(t.model.true_set())}};
  return j;
}

namespace {

Json just_to_json(const Justification& j) {
  struct {
    Json operator()(const just::Premise& p) const { return {{"kind", "Premise"}, {"index", p.index}}; }
    Json operator()(const just::Axiom& a) const { return {{"kind", "Axiom"}, {"scheme", scheme_name(a.scheme)}}; }
    Json operator()(const just::AN& a) const { return {{"kind", "AN"}, {"from", {a.line}}}; }
    Json operator()(const just::MP& m) const { return {{"kind", "MP"}, {"from", {m.a, m.b}}}; }
    Json operator()(const just::SP&) const { return {{"kind", "SP"}}; }
    Json operator()(const just::TND&) const { return {{"kind", "TND"}}; }
  } visit;
  return std::visit(visit, j);
}

std::vector<std::size_t> refs(const Json& j, std::size_t count) {
  const Json& from = field(j, "from");
  if (!from.is_array() || from.size() != count)
    throw InvalidStructure("'from' must list " + std::to_string(count) + " line number(s)");
  std::vector<std::size_t> out;
  for (const auto& v : from) out.push_back(index_field(v, "line reference"));
  return out;
}

Justification just_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InvalidStructure("justification kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Premise") {
    if (j.contains("index")) return just::Premise{index_field(j.at("index"), "premise index")};
    return just::Premise{refs(j, 1)[0]};
  }
  if (k == "Axiom") {
    const Json& s = field(j, "scheme");
    if (!s.is_string()) throw InvalidStructure("axiom scheme must be a string");
    auto scheme = parse_scheme(s.get<std::string>());
    if (!scheme) throw InvalidStructure("unknown axiom scheme '" + s.get<std::string>() + "'");
    return just::Axiom{*scheme};
  }
  if (k == "AN") return just::AN{refs(j, 1)[0]};
  if (k == "MP") {
    auto r = refs(j, 2);
    return just::MP{r[0], r[1]};
  }
  if (k == "SP") return just::SP{};
  if (k == "TND") return just::TND{};
  throw InvalidStructure("unknown justification kind '" + k + "'");
}

Formula formula_field(const Json& j) {
  if (!j.is_string()) throw InvalidStructure("formulas must be strings");
  return parse(j.get<std::string>());
}

}  // namespace

Derivation derivation_from_json(const Json& j) {
  Derivation d;
  if (j.contains("logic")) {
    const Json& l = j.at("logic");
    if (l.is_string()) {
      d.logic = Logic::from_name(l.get<std::string>());
    } else if (l.is_object()) {
      std::vector<Formula> axioms;
      for (const auto& a : field(l, "axioms")) axioms.push_back(formula_field(a));
      d.logic = Logic::custom(std::move(axioms));
    } else {
      throw InvalidStructure("logic must be a name or {\"axioms\": [...]}");
    }
  }
  if (j.contains("premises"))
    for (const auto& p : j.at("premises")) d.premises.push_back(formula_field(p));
  const Json& lines = field(j, "lines");
  if (!lines.is_array()) throw InvalidStructure("lines must be a list");
  for (const auto& line : lines)
    d.lines.push_back({formula_field(field(line, "formula")), just_from_json(field(line, "just"))});
  return d;
}

Json to_json(const Derivation& d) {
  Json j;
  if (d.logic.kind() == LogicKind::Custom) {
    Json axioms = Json::array();
    for (const auto& a : d.logic.axioms()) axioms.push_back(render(a));
    j["logic"] = {{"axioms", axioms}};
  } else {
    j["logic"] = d.logic.name();
  }
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(render(p));
  j["premises"] = premises;
  Json lines = Json::array();
  for (const auto& l : d.lines) lines.push_back({{"formula", render(l.formula)}, {"just", just_to_json(l.just)}});
  j["lines"] = lines;
  return j;
}

Json to_json(const DerivationResult& r, const Derivation& d) {
  Json j;
  j["verdict"] = verdict_name(r.verdict());
  if (r.conclusion) j["conclusion"] = render(*r.conclusion);
  Json lines = Json::array();
  for (std::size_t i = 0; i < r.lines.size(); ++i) {
    Json l = {{"line", i + 1}, {"formula", render(d.lines[i].formula)}, {"just", justification_name(d.lines[i].just)},
              {"status", failure_name(r.lines[i].failure)}};
    if (!r.lines[i].reason.empty()) l["reason"] = r.lines[i].reason;
    lines.push_back(l);
  }
  j["lines"] = lines;
  return j;
}

}  // namespace l5
