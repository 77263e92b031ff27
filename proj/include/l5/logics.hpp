#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "l5/algebra.hpp"
#include "l5/kripke.hpp"

namespace l5 {

enum class LogicKind { IPC, HT, G, KC, CPC, Custom };

/// An intermediate logic: IPC plus the schemes in axioms() (variables in an
/// axiom stand for arbitrary formulas).
class Logic {
public:
  static Logic ipc() { return Logic(LogicKind::IPC); }
  static Logic ht() { return Logic(LogicKind::HT); }
  static Logic g() { return Logic(LogicKind::G); }
  static Logic kc() { return Logic(LogicKind::KC); }
  static Logic cpc() { return Logic(LogicKind::CPC); }
  /// Throws InvalidStructure unless every axiom is propositional and CPC-valid.
  static Logic custom(std::vector<Formula> axioms);
  /// "IPC", "HT", "G", "KC", "CPC" (case-insensitive). Throws InvalidStructure.
  static Logic from_name(std::string_view name);

  LogicKind kind() const noexcept { return kind_; }
  std::string name() const;
  const std::vector<Formula>& axioms() const noexcept { return axioms_; }

private:
  explicit Logic(LogicKind k);
  LogicKind kind_;
  std::vector<Formula> axioms_;
};

enum class Verdict { Valid, Invalid, Unknown };
std::string_view verdict_name(Verdict v);

/// Falsifying frame, assignment and world.
struct KripkeWitness {
  KripkeFrame frame;
  FrameAssignment g;
  World world;
};

/// Falsifying algebra and assignment. With a designated set the algebra is an
/// L5-model and the formula is undesignated; without one it evaluates below top.
struct AlgebraWitness {
  HeytingAlgebra algebra;
  std::optional<ElementSet> true_set;
  AlgebraAssignment gamma;
  Element value;
};

using Witness = std::variant<KripkeWitness, AlgebraWitness>;

struct DecisionOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;
  bool complete = false;                 // verdict produced by a complete decider
  std::optional<std::size_t> bound_used; // size limit of a bounded search
  std::string method;
  std::vector<std::string> notes;
};

struct DecideOptions {
  std::size_t frame_bound = 6;  // worlds, for IPC and KC countermodel search
};

/// Validity of a propositional formula in logic. Throws InvalidStructure on modal input.
DecisionOutcome decide(const Logic& logic, const Formula& f, const DecideOptions& opts = {});

/// Scheme (i) test: f has the form of a theorem of logic, i.e. its box
/// abstraction skeleton is valid. Unknown propagates from a bounded decider.
DecisionOutcome has_theorem_form(const Logic& logic, const Formula& f, const DecideOptions& opts = {});

/// Every defining axiom evaluates to top in h under all assignments.
bool satisfies_axioms(const Logic& logic, const HeytingAlgebra& h);

/// Structural characterization of the algebras underlying L5(logic)-models:
/// HT at most three elements, G linear, KC the KC-algebras, IPC every DP
/// algebra, CPC the 2-element algebra. Custom falls back to satisfies_axioms.
bool reduct_class_check(const Logic& logic, const HeytingAlgebra& h);

/// Algebras with DP of size <= bound that satisfy the axioms of logic.
std::vector<HeytingAlgebra> l5_algebras(const Logic& logic, std::size_t bound);

/// premises entail f in every L5(logic)-model of size <= bound. Invalid with a
/// model witness, Valid only for certified theorem shapes, else Unknown.
DecisionOutcome l5_valid(const Logic& logic, const std::vector<Formula>& premises, const Formula& f,
                         std::size_t bound = 5);

/// box premises |- box f in L5(logic), decided as premises |- f in logic.
DecisionOutcome boxed_reduction(const Logic& logic, const std::vector<Formula>& premises, const Formula& f,
                                const DecideOptions& opts = {});

/// |-_HT phi <-> psi, the formula-level reading of strong equivalence.
DecisionOutcome strong_equiv_ht(const Formula& phi, const Formula& psi);

/// Frames that characterize logic (where known): HT at most two worlds, G
/// linear, KC single maximal world, IPC all, CPC the point.
std::vector<KripkeFrame> logic_frames(const Logic& logic, std::size_t max_worlds);

}  // namespace l5
