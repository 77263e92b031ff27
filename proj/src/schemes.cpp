#include "l5/schemes.hpp"

#include <array>

namespace l5 {

Formula metavar(std::string_view name) { return Formula::var("?" + std::string(name)); }

bool match(const Formula& pattern, const Formula& f, Bindings& bindings) {
  switch (pattern.op()) {
    case Op::Var: {
      Var v = pattern.variable();
      if (v.name().front() != '?') return f.op() == Op::Var && f.variable() == v;
      for (const auto& [bound, value] : bindings)
        if (bound == v) return value == f;
      bindings.emplace_back(v, f);
      return true;
    }
    case Op::Falsum: return f.op() == Op::Falsum;
    case Op::Box: return f.op() == Op::Box && match(pattern.inner(), f.inner(), bindings);
    default:
      return f.op() == pattern.op() && match(pattern.left(), f.left(), bindings) &&
             match(pattern.right(), f.right(), bindings);
  }
}

std::string_view scheme_name(Scheme s) {
  static constexpr std::array<std::string_view, 6> names{"i", "ii", "iii", "iv", "v", "vi"};
  return names[static_cast<std::size_t>(s)];
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    auto s = static_cast<Scheme>(i);
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

struct Patterns {
  Formula phi = metavar("phi");
  Formula psi = metavar("psi");
  Formula chi = metavar("chi");
  using F = Formula;

  // (ii) box phi -> phi
  F ii = F::implies(F::box(phi), phi);
  // (iii) box(phi -> psi) -> (box(psi -> chi) -> box(phi -> chi))
  F iii = F::implies(F::box(F::implies(phi, psi)),
                     F::implies(F::box(F::implies(psi, chi)), F::box(F::implies(phi, chi))));
  // (iv) box(phi | psi) -> (box phi | box psi)
  F iv = F::implies(F::box(F::disj(phi, psi)), F::disj(F::box(phi), F::box(psi)));
  // (v) box phi -> box box phi
  F v = F::implies(F::box(phi), F::box(F::box(phi)));
  // (vi) ~box phi -> box ~box phi
  F vi = F::implies(F::neg(F::box(phi)), F::box(F::neg(F::box(phi))));

  std::vector<NamedPattern> laws{
      {"box-top identity", F::iff(F::box(phi), F::ident(phi, F::top()))},
      {"K", F::implies(F::box(F::implies(phi, psi)), F::implies(F::box(phi), F::box(psi)))},
      {"box over conjunction", F::iff(F::box(F::conj(phi, psi)), F::conj(F::box(phi), F::box(psi)))},
      {"strict equivalence", F::iff(F::ident(phi, psi), F::box(F::iff(phi, psi)))},
  };

  static const Patterns& get() {
    static const Patterns p;
    return p;
  }
};

// a and b agree except at positions where a carries phi and b carries psi.
bool differ_by_holes(const Formula& a, const Formula& b, const Formula& phi, const Formula& psi) {
  if (a == phi && b == psi) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::Var: return a.variable() == b.variable();
    case Op::Falsum: return true;
    case Op::Box: return differ_by_holes(a.inner(), b.inner(), phi, psi);
    default:
      return differ_by_holes(a.left(), b.left(), phi, psi) && differ_by_holes(a.right(), b.right(), phi, psi);
  }
}

}  // namespace

const Formula& scheme_pattern(Scheme s) {
  const auto& p = Patterns::get();
  switch (s) {
    case Scheme::II: return p.ii;
    case Scheme::III: return p.iii;
    case Scheme::IV: return p.iv;
    case Scheme::V: return p.v;
    case Scheme::VI: return p.vi;
    case Scheme::I: break;
  }
  throw std::invalid_argument("scheme i has no syntactic pattern");
}

bool instantiates(Scheme s, const Formula& f) {
  if (s == Scheme::I) return false;
  Bindings b;
  return match(scheme_pattern(s), f, b);
}

std::optional<Scheme> match_modal_axiom(const Formula& f) {
  for (Scheme s : {Scheme::II, Scheme::III, Scheme::IV, Scheme::V, Scheme::VI})
    if (instantiates(s, f)) return s;
  return std::nullopt;
}

bool is_excluded_middle(const Formula& f) {
  if (f.op() != Op::Or) return false;
  auto n = as_negation(f.right());
  return n && *n == f.left();
}

bool is_substitution_instance(const Formula& f) {
  if (f.op() != Op::Implies) return false;
  auto premise = as_ident(f.left());
  auto conclusion = as_ident(f.right());
  if (!premise || !conclusion) return false;
  return differ_by_holes(conclusion->first, conclusion->second, premise->first, premise->second);
}

const std::vector<NamedPattern>& modal_law_patterns() { return Patterns::get().laws; }

std::optional<std::string> match_theorem_pattern(const Formula& f) {
  if (auto s = match_modal_axiom(f)) return "axiom " + std::string(scheme_name(*s));
  for (const auto& law : modal_law_patterns()) {
    Bindings b;
    if (match(law.pattern, f, b)) return law.name;
  }
  if (is_substitution_instance(f)) return "substitution principle";
  if (is_excluded_middle(f)) return "excluded middle";
  return std::nullopt;
}

}  // namespace l5
