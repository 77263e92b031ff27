#include "l5/proofkit.hpp"

namespace l5 {

AxiomCheck is_instance_of(const Logic& logic, Scheme s, const Formula& f) {
  AxiomCheck out;
  if (s != Scheme::I) {
    if (instantiates(s, f)) out.scheme = s;
    return out;
  }
  DecisionOutcome d = has_theorem_form(logic, f);
  out.detail = d.method;
  if (d.verdict == Verdict::Valid)
    out.scheme = Scheme::I;
  else if (d.verdict == Verdict::Unknown)
    out.unknown = true;
  return out;
}

AxiomCheck is_axiom_instance(const Logic& logic, const Formula& f) {
  if (auto s = match_modal_axiom(f)) return {s, false, ""};
  return is_instance_of(logic, Scheme::I, f);
}

std::string justification_name(const Justification& j) {
  struct {
    std::string operator()(const just::Premise& p) const { return "Premise " + std::to_string(p.index); }
    std::string operator()(const just::Axiom& a) const { return "Axiom " + std::string(scheme_name(a.scheme)); }
    std::string operator()(const just::AN& a) const { return "AN " + std::to_string(a.line); }
    std::string operator()(const just::MP& m) const {
      return "MP " + std::to_string(m.a) + ", " + std::to_string(m.b);
    }
    std::string operator()(const just::SP&) const { return "SP"; }
    std::string operator()(const just::TND&) const { return "TND"; }
  } visit;
  return std::visit(visit, j);
}

std::string_view failure_name(LineFailure f) {
  switch (f) {
    case LineFailure::None: return "ok";
    case LineFailure::BadReference: return "bad reference";
    case LineFailure::ShapeMismatch: return "shape mismatch";
    case LineFailure::AnOnNonAxiom: return "AN on non-axiom";
    case LineFailure::NotAnInstance: return "not an instance";
    case LineFailure::UnknownInstance: return "instance check inconclusive";
    case LineFailure::PremiseMismatch: return "premise mismatch";
  }
  return "?";
}

Verdict DerivationResult::verdict() const {
  bool unknown = false;
  for (const auto& l : lines) {
    if (l.failure == LineFailure::UnknownInstance)
      unknown = true;
    else if (!l.ok())
      return Verdict::Invalid;
  }
  if (lines.empty()) return Verdict::Invalid;
  return unknown ? Verdict::Unknown : Verdict::Valid;
}

namespace {

class Checker {
public:
  explicit Checker(const Derivation& d) : d_(d) {}

  LineVerdict check(std::size_t k) {
    const ProofLine& line = d_.lines[k];
    return std::visit([&](const auto& j) { return on(k, line.formula, j); }, line.just);
  }

private:
  static LineVerdict fail(LineFailure f, std::string why) { return {f, std::move(why)}; }

  bool backward(std::size_t k, std::size_t ref) const { return ref >= 1 && ref <= k; }

  LineVerdict on(std::size_t, const Formula& f, const just::Premise& p) {
    if (p.index < 1 || p.index > d_.premises.size())
      return fail(LineFailure::BadReference, "no premise " + std::to_string(p.index));
    if (d_.premises[p.index - 1] != f)
      return fail(LineFailure::PremiseMismatch, "premise " + std::to_string(p.index) + " is " +
                                                     render(d_.premises[p.index - 1]));
    return {};
  }

  LineVerdict on(std::size_t, const Formula& f, const just::Axiom& a) {
    AxiomCheck c = is_instance_of(d_.logic, a.scheme, f);
    if (c.scheme) return {};
    std::string name = "scheme " + std::string(scheme_name(a.scheme));
    if (c.unknown) return fail(LineFailure::UnknownInstance, name + ": " + c.detail);
    return fail(LineFailure::NotAnInstance, "not an instance of " + name);
  }

  LineVerdict on(std::size_t k, const Formula& f, const just::AN& a) {
    if (!backward(k, a.line)) return fail(LineFailure::BadReference, "line " + std::to_string(a.line) + " is not earlier");
    const ProofLine& src = d_.lines[a.line - 1];
    if (!std::holds_alternative<just::Axiom>(src.just))
      return fail(LineFailure::AnOnNonAxiom, "line " + std::to_string(a.line) + " is justified by " +
                                                 justification_name(src.just) + ", not as an axiom");
    if (f != Formula::box(src.formula))
      return fail(LineFailure::ShapeMismatch, "expected box of line " + std::to_string(a.line));
    return {};
  }

  LineVerdict on(std::size_t k, const Formula& f, const just::MP& m) {
    if (!backward(k, m.a) || !backward(k, m.b))
      return fail(LineFailure::BadReference, "MP must cite two earlier lines");
    const Formula& p = d_.lines[m.a - 1].formula;
    const Formula& q = d_.lines[m.b - 1].formula;
    auto fits = [&](const Formula& minor, const Formula& major) {
      return major.op() == Op::Implies && major.left() == minor && major.right() == f;
    };
    if (fits(p, q) || fits(q, p)) return {};
    return fail(LineFailure::ShapeMismatch, "cited lines are not X and X -> " + render(f));
  }

  LineVerdict on(std::size_t, const Formula& f, const just::SP&) {
    if (is_substitution_instance(f)) return {};
    return fail(LineFailure::NotAnInstance, "not of the form (a == b) -> (c[x:=a] == c[x:=b])");
  }

  LineVerdict on(std::size_t, const Formula& f, const just::TND&) {
    if (is_excluded_middle(f)) return {};
    return fail(LineFailure::NotAnInstance, "not of the form a | ~a");
  }

  const Derivation& d_;
};

}  // namespace

DerivationResult check_derivation(const Derivation& d) {
  DerivationResult r;
  Checker c(d);
  for (std::size_t k = 0; k < d.lines.size(); ++k) r.lines.push_back(c.check(k));
  if (!d.lines.empty()) r.conclusion = d.lines.back().formula;
  return r;
}

}  // namespace l5
