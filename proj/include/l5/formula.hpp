#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "l5/error.hpp"

namespace l5 {

/// Interned propositional variable. Two Vars are equal iff their names are.
/// Ordering is by name so that anything sorted by Var prints deterministically.
class Var {
public:
  explicit Var(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Var a, Var b) noexcept { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Var a, Var b);

private:
  std::uint32_t id_;
};

/// True iff `name` matches [a-z][a-zA-Z0-9_]* and is not a keyword.
bool is_identifier(std::string_view name);

enum class Op : std::uint8_t { Var, Falsum, And, Or, Implies, Box };

/// How a node was written in source text. Ignored by equality and hashing;
/// render() uses it to reproduce the user's choice between core and sugar.
enum class Surface : std::uint8_t { Auto, Core, Not, Top, Iff, Ident };

/// Immutable formula over variables, bot, and, or, implies and box.
/// Derived connectives (~, top, <->, ==) are expanded on construction.
class Formula {
public:
  static Formula var(std::string_view name);
  static Formula var(Var v);
  static Formula bot();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula box(Formula a);

  static Formula neg(Formula a);                 // a -> bot
  static Formula top();                          // ~bot
  static Formula iff(Formula a, Formula b);      // (a -> b) & (b -> a)
  static Formula ident(Formula a, Formula b);    // box(a -> b) & box(b -> a)

  Op op() const noexcept;
  Var variable() const;                 // requires op() == Op::Var
  const Formula& left() const;          // And/Or/Implies
  const Formula& right() const;         // And/Or/Implies
  const Formula& inner() const;         // Box

  Surface surface() const noexcept;
  Formula with_surface(Surface s) const;

  bool is_propositional() const noexcept;
  std::size_t depth() const noexcept;
  std::size_t modal_depth() const noexcept;
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  /// Variables occurring anywhere (including under box), sorted by name.
  std::vector<Var> variables() const;
  bool contains(Var v) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  /// Total order consistent with ==; used for canonical sorting of sequents.
  friend bool structurally_less(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::optional<Var> v, std::shared_ptr<const Node> l,
                      std::shared_ptr<const Node> r, Surface s);

  std::shared_ptr<const Node> node_;
};

bool structurally_less(const Formula& a, const Formula& b);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Recognizers for the derived connectives. Each returns the operands only when
// the core pattern matches exactly.
std::optional<Formula> as_negation(const Formula& f);
bool is_top(const Formula& f);
std::optional<std::pair<Formula, Formula>> as_iff(const Formula& f);
std::optional<std::pair<Formula, Formula>> as_ident(const Formula& f);

/// chi[x := phi]: every occurrence of x, including under box.
Formula substitute(const Formula& chi, Var x, const Formula& phi);

/// Simultaneous substitution.
Formula substitute_all(const Formula& chi, const std::vector<std::pair<Var, Formula>>& binding);

struct BoxAbstraction {
  Formula skeleton;
  std::vector<std::pair<Var, Formula>> binding;  // fresh variable -> boxed subformula
};

/// Replaces each maximal box-rooted subformula with a fresh variable named from a
/// hash of its rendering; identical subformulas share a variable. The skeleton
/// is propositional and substitute_all(skeleton, binding) == f.
BoxAbstraction abstract_boxes(const Formula& f);

/// Conjunction of a non-empty list, left-nested; top for an empty list.
Formula conjoin(const std::vector<Formula>& parts);

// ---- text syntax ---------------------------------------------------------

/// Grammar: identifiers [a-z][a-zA-Z0-9_]*, bot, top, prefix ~ and box,
/// then &, then |, then right-associative ->, then non-associative <-> and ==.
/// Unicode aliases ⊥ ⊤ ¬ □ ∧ ∨ → ↔ ≡ are accepted.
Formula parse(std::string_view text);

/// Canonical ASCII rendering; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace l5

template <>
struct std::hash<l5::Formula> {
  std::size_t operator()(const l5::Formula& f) const noexcept { return f.hash(); }
};
