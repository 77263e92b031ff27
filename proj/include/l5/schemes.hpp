#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "l5/formula.hpp"

namespace l5 {

/// Metavariable bindings produced by match().
using Bindings = std::vector<std::pair<Var, Formula>>;

/// Metavariables are Vars whose name starts with '?'; they match any formula,
/// consistently across occurrences. Other leaves must match exactly.
Formula metavar(std::string_view name);
bool match(const Formula& pattern, const Formula& f, Bindings& bindings);

/// Axiom schemes of L5(I). Scheme I ("has the form of an I-theorem") is not
/// a syntactic pattern; see proofkit.
enum class Scheme { I, II, III, IV, V, VI };

std::string_view scheme_name(Scheme s);            // "i" .. "vi"
std::optional<Scheme> parse_scheme(std::string_view name);

/// Pattern for schemes II..VI, in metavariables ?phi ?psi ?chi.
const Formula& scheme_pattern(Scheme s);

/// First of II..VI that f instantiates.
std::optional<Scheme> match_modal_axiom(const Formula& f);
bool instantiates(Scheme s, const Formula& f);

/// phi | ~phi
bool is_excluded_middle(const Formula& f);

/// (phi == psi) -> (chi[x:=phi] == chi[x:=psi]) for some chi and x.
bool is_substitution_instance(const Formula& f);

/// Theorem shapes certified without search: axioms II..VI, the four modal laws
/// (box-as-identity-with-top, K, box over &, strict equivalence), the
/// substitution principle and excluded middle. Returns the shape's name.
std::optional<std::string> match_theorem_pattern(const Formula& f);

struct NamedPattern {
  std::string name;
  Formula pattern;
};
const std::vector<NamedPattern>& modal_law_patterns();

}  // namespace l5
