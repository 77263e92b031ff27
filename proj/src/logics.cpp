#include "l5/logics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>

#include "l5/ipc_prover.hpp"
#include "l5/schemes.hpp"

namespace l5 {
namespace {

Formula x() { return Formula::var("x"); }
Formula y() { return Formula::var("y"); }

const std::vector<KripkeFrame>& cached_frames(std::size_t n, FrameClass c) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, FrameClass>, std::vector<KripkeFrame>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, c);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_frames(n, c)).first;
  return it->second;
}

const std::vector<HeytingAlgebra>& cached_algebras(std::size_t n, bool dp) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, bool>, std::vector<HeytingAlgebra>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, dp);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_heyting(n, dp)).first;
  return it->second;
}

std::vector<Var> joint_variables(const std::vector<Formula>& fs) {
  std::set<Var> vars;
  for (const auto& f : fs)
    for (Var v : f.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

void require_propositional(const Formula& f) {
  if (!f.is_propositional())
    throw InvalidStructure("intermediate logics decide propositional formulas only: " + render(f));
}

/// First assignment under which f is not top in h.
std::optional<AlgebraWitness> refute_in_algebra(const HeytingAlgebra& h, const Formula& f) {
  std::optional<AlgebraWitness> found;
  for_each_assignment<Element>(f.variables(), elements(h), [&](const AlgebraAssignment& gamma) {
    Element v = eval(h, gamma, f);
    if (v == h.top()) return true;
    found = AlgebraWitness{h, std::nullopt, gamma, v};
    return false;
  });
  return found;
}

DecisionOutcome by_matrix(const HeytingAlgebra& h, const Formula& f, std::string method) {
  DecisionOutcome out;
  out.complete = true;
  out.method = std::move(method);
  if (auto w = refute_in_algebra(h, f)) {
    out.verdict = Verdict::Invalid;
    out.witness = std::move(*w);
  } else {
    out.verdict = Verdict::Valid;
  }
  return out;
}

std::optional<KripkeWitness> refute_on_frames(const std::vector<KripkeFrame>& frames, const Formula& f) {
  for (const auto& frame : frames)
    if (auto c = refute_on_frame(frame, f)) return KripkeWitness{frame, c->g, c->world};
  return std::nullopt;
}

/// Axiom with its variables turned into metavariables.
Formula as_pattern(const Formula& axiom) {
  std::vector<std::pair<Var, Formula>> binding;
  for (Var v : axiom.variables()) binding.emplace_back(v, metavar(v.name()));
  return substitute_all(axiom, binding);
}

bool instance_of_some_axiom(const Logic& logic, const Formula& f) {
  for (const auto& a : logic.axioms()) {
    Bindings b;
    if (match(as_pattern(a), f, b)) return true;
  }
  return false;
}

DecisionOutcome decide_ipc(const Formula& f, const DecideOptions& opts) {
  DecisionOutcome out;
  out.complete = true;
  out.method = "G4ip sequent search";
  if (ipc_valid(f)) {
    out.verdict = Verdict::Valid;
    return out;
  }
  out.verdict = Verdict::Invalid;
  if (auto w = refute_on_frames(cached_frames(opts.frame_bound, FrameClass::Any), f)) {
    out.witness = std::move(*w);
  } else {
    out.bound_used = opts.frame_bound;
    out.notes.push_back("not provable, but no countermodel with at most " + std::to_string(opts.frame_bound) +
                        " worlds");
  }
  return out;
}

DecisionOutcome decide_kc(const Logic& logic, const Formula& f, const DecideOptions& opts) {
  DecisionOutcome out;
  if (instance_of_some_axiom(logic, f)) {
    out.verdict = Verdict::Valid;
    out.complete = true;
    out.method = "instance of the weak excluded middle";
    return out;
  }
  if (auto w = refute_in_algebra(HeytingAlgebra::chain(2), f)) {
    out.verdict = Verdict::Invalid;
    out.witness = std::move(*w);
    out.method = "classical refutation";
    return out;
  }
  if (auto w = refute_in_algebra(HeytingAlgebra::chain(3), f)) {
    out.verdict = Verdict::Invalid;
    out.witness = std::move(*w);
    out.method = "refutation in the 3-element chain";
    return out;
  }
  // Weak excluded middle for the atoms yields it for every formula built from
  // them, and atoms outside f can be sent to bot, so this proof search is complete.
  std::vector<Formula> hyps;
  for (Var v : f.variables()) {
    Formula p = Formula::var(v);
    hyps.push_back(Formula::disj(Formula::neg(p), Formula::neg(Formula::neg(p))));
  }
  if (ipc_provable(hyps, f)) {
    out.verdict = Verdict::Valid;
    out.complete = true;
    out.method = "G4ip proof from the weak excluded middle on the atoms";
    return out;
  }
  if (auto w = refute_on_frames(cached_frames(opts.frame_bound, FrameClass::SingleMaximal), f)) {
    out.verdict = Verdict::Invalid;
    out.witness = std::move(*w);
    out.method = "frame with a single maximal world";
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.bound_used = opts.frame_bound;
  out.method = "frames with a single maximal world";
  out.notes.push_back("no countermodel with at most " + std::to_string(opts.frame_bound) + " worlds");
  return out;
}

DecisionOutcome decide_custom(const Logic& logic, const Formula& f) {
  DecisionOutcome out;
  if (auto w = refute_in_algebra(HeytingAlgebra::chain(2), f)) {
    out.verdict = Verdict::Invalid;
    out.witness = std::move(*w);
    out.method = "classical refutation";
    return out;
  }
  if (instance_of_some_axiom(logic, f) || ipc_valid(f)) {
    out.verdict = Verdict::Valid;
    out.complete = true;
    out.method = "axiom instance or intuitionistic proof";
    return out;
  }
  constexpr std::size_t bound = 6;
  for (const auto& h : cached_algebras(bound, false)) {
    if (!satisfies_axioms(logic, h)) continue;
    if (auto w = refute_in_algebra(h, f)) {
      out.verdict = Verdict::Invalid;
      out.witness = std::move(*w);
      out.method = "algebra validating the axioms";
      return out;
    }
  }
  out.verdict = Verdict::Unknown;
  out.bound_used = bound;
  out.method = "algebras validating the axioms";
  return out;
}

}  // namespace

Logic::Logic(LogicKind k) : kind_(k) {
  switch (k) {
    case LogicKind::HT: axioms_ = {Formula::disj(Formula::disj(x(), Formula::implies(x(), y())), Formula::neg(y()))}; break;
    case LogicKind::G: axioms_ = {Formula::disj(Formula::implies(x(), y()), Formula::implies(y(), x()))}; break;
    case LogicKind::KC: axioms_ = {Formula::disj(Formula::neg(x()), Formula::neg(Formula::neg(x())))}; break;
    case LogicKind::CPC: axioms_ = {Formula::disj(x(), Formula::neg(x()))}; break;
    default: break;
  }
}

Logic Logic::custom(std::vector<Formula> axioms) {
  for (const auto& a : axioms) {
    require_propositional(a);
    if (refute_in_algebra(HeytingAlgebra::chain(2), a))
      throw InvalidStructure("axiom is not classically valid: " + render(a));
  }
  Logic l(LogicKind::Custom);
  l.axioms_ = std::move(axioms);
  return l;
}

Logic Logic::from_name(std::string_view name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "IPC" || up == "L5") return ipc();
  if (up == "HT") return ht();
  if (up == "G") return g();
  if (up == "KC") return kc();
  if (up == "CPC") return cpc();
  throw InvalidStructure("unknown logic '" + std::string(name) + "' (expected IPC, HT, G, KC or CPC)");
}

std::string Logic::name() const {
  switch (kind_) {
    case LogicKind::IPC: return "IPC";
    case LogicKind::HT: return "HT";
    case LogicKind::G: return "G";
    case LogicKind::KC: return "KC";
    case LogicKind::CPC: return "CPC";
    case LogicKind::Custom: {
      std::string s = "IPC";
      for (const auto& a : axioms_) s += " + " + render(a);
      return s;
    }
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "Valid";
    case Verdict::Invalid: return "Invalid";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

DecisionOutcome decide(const Logic& logic, const Formula& f, const DecideOptions& opts) {
  require_propositional(f);
  switch (logic.kind()) {
    case LogicKind::IPC: return decide_ipc(f, opts);
    case LogicKind::CPC: return by_matrix(HeytingAlgebra::chain(2), f, "two-valued truth tables");
    case LogicKind::HT: return by_matrix(HeytingAlgebra::chain(3), f, "3-element chain");
    case LogicKind::G: {
      const std::size_t n = f.variables().size() + 2;
      return by_matrix(HeytingAlgebra::chain(n), f, std::to_string(n) + "-element chain");
    }
    case LogicKind::KC: return decide_kc(logic, f, opts);
    case LogicKind::Custom: return decide_custom(logic, f);
  }
  throw InternalError("unhandled logic");
}

DecisionOutcome has_theorem_form(const Logic& logic, const Formula& f, const DecideOptions& opts) {
  DecisionOutcome out = decide(logic, abstract_boxes(f).skeleton, opts);
  out.method = "box abstraction, then " + out.method;
  return out;
}

bool satisfies_axioms(const Logic& logic, const HeytingAlgebra& h) {
  return std::none_of(logic.axioms().begin(), logic.axioms().end(),
                      [&](const Formula& a) { return refute_in_algebra(h, a).has_value(); });
}

bool reduct_class_check(const Logic& logic, const HeytingAlgebra& h) {
  switch (logic.kind()) {
    case LogicKind::IPC: return has_dp(h);
    case LogicKind::HT: return has_dp(h) && h.size() <= 3;
    case LogicKind::G: return is_linear(h);
    case LogicKind::KC: return is_kc_algebra(h);
    case LogicKind::CPC: return h.size() == 2;
    case LogicKind::Custom: return has_dp(h) && satisfies_axioms(logic, h);
  }
  return false;
}

std::vector<HeytingAlgebra> l5_algebras(const Logic& logic, std::size_t bound) {
  std::vector<HeytingAlgebra> out;
  for (const auto& h : cached_algebras(bound, true))
    if (satisfies_axioms(logic, h)) out.push_back(h);
  return out;
}

DecisionOutcome l5_valid(const Logic& logic, const std::vector<Formula>& premises, const Formula& f,
                         std::size_t bound) {
  DecisionOutcome out;
  std::vector<Formula> all = premises;
  all.push_back(f);
  const std::vector<Var> vars = joint_variables(all);

  for (const auto& h : l5_algebras(logic, bound)) {
    for (const Filter& u : ultrafilters(h)) {
      L5Model m = make_l5_model(h, u);
      std::optional<AlgebraWitness> found;
      for_each_assignment<Element>(vars, elements(h), [&](const AlgebraAssignment& gamma) {
        for (const auto& p : premises)
          if (!satisfies(m, gamma, p)) return true;
        Element v = eval(m, gamma, f);
        if (m.designated(v)) return true;
        found = AlgebraWitness{h, m.true_set(), gamma, v};
        return false;
      });
      if (found) {
        out.verdict = Verdict::Invalid;
        out.witness = std::move(*found);
        out.method = "L5(" + logic.name() + ")-model search";
        return out;
      }
    }
  }

  out.bound_used = bound;
  if (std::find(premises.begin(), premises.end(), f) != premises.end()) {
    out.verdict = Verdict::Valid;
    out.method = "conclusion is a premise";
    return out;
  }
  auto axiom_form = [&](const Formula& g) -> std::optional<std::string> {
    if (auto s = match_modal_axiom(g)) return "axiom " + std::string(scheme_name(*s));
    if (has_theorem_form(logic, g).verdict == Verdict::Valid) return std::string("axiom i");
    return std::nullopt;
  };
  auto certified = [&](const Formula& g) -> std::optional<std::string> {
    if (auto name = match_theorem_pattern(g)) return name;
    if (auto name = axiom_form(g)) return name;
    if (g.op() == Op::Box)
      if (auto name = axiom_form(g.inner())) return "necessitation of " + *name;
    return std::nullopt;
  };
  if (auto name = certified(f)) {
    out.verdict = Verdict::Valid;
    out.method = "theorem shape: " + *name;
    return out;
  }
  for (const auto& p : premises)
    if (auto name = certified(Formula::implies(p, f))) {
      out.verdict = Verdict::Valid;
      out.method = "modus ponens from a premise and theorem shape: " + *name;
      return out;
    }
  out.verdict = Verdict::Unknown;
  out.method = "L5(" + logic.name() + ")-model search";
  out.notes.push_back("no countermodel with at most " + std::to_string(bound) +
                      " elements; bounded search cannot certify validity");
  return out;
}

DecisionOutcome boxed_reduction(const Logic& logic, const std::vector<Formula>& premises, const Formula& f,
                                const DecideOptions& opts) {
  for (const auto& p : premises) require_propositional(p);
  require_propositional(f);
  Formula target = premises.empty() ? f : Formula::implies(conjoin(premises), f);
  DecisionOutcome out = decide(logic, target, opts);
  out.method = "reduction to " + logic.name() + " consequence; " + out.method;
  return out;
}

DecisionOutcome strong_equiv_ht(const Formula& phi, const Formula& psi) {
  require_propositional(phi);
  require_propositional(psi);
  DecisionOutcome out = decide(Logic::ht(), Formula::iff(phi, psi));
  out.method = "3-element chain on phi <-> psi, read as phi == psi in L5(HT)";
  return out;
}

std::vector<KripkeFrame> logic_frames(const Logic& logic, std::size_t max_worlds) {
  switch (logic.kind()) {
    case LogicKind::IPC: return cached_frames(max_worlds, FrameClass::Any);
    case LogicKind::HT: return cached_frames(std::min<std::size_t>(max_worlds, 2), FrameClass::AtMostTwo);
    case LogicKind::G: return cached_frames(max_worlds, FrameClass::Linear);
    case LogicKind::KC: return cached_frames(max_worlds, FrameClass::SingleMaximal);
    case LogicKind::CPC: return {KripkeFrame::point()};
    case LogicKind::Custom: {
      std::vector<KripkeFrame> out;
      for (const auto& fr : cached_frames(max_worlds, FrameClass::Any))
        if (std::all_of(logic.axioms().begin(), logic.axioms().end(),
                        [&](const Formula& a) { return frame_valid(fr, a); }))
          out.push_back(fr);
      return out;
    }
  }
  return {};
}

}  // namespace l5
