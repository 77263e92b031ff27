#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "l5/logics.hpp"
#include "l5/schemes.hpp"

namespace l5 {

struct AxiomCheck {
  std::optional<Scheme> scheme;  // set when f is an instance
  bool unknown = false;          // scheme (i) test was inconclusive
  std::string detail;
};

/// Schemes (ii)-(vi) by pattern matching, then scheme (i) by box abstraction
/// and the logic's decider.
AxiomCheck is_axiom_instance(const Logic& logic, const Formula& f);
/// Checks one named scheme only.
AxiomCheck is_instance_of(const Logic& logic, Scheme s, const Formula& f);

namespace just {
struct Premise { std::size_t index; };  // 1-based into the premise list
struct Axiom { Scheme scheme; };
struct AN { std::size_t line; };        // 1-based line reference
struct MP { std::size_t a, b; };        // either order: one is X, the other X -> this line
struct SP {};
struct TND {};
}  // namespace just

using Justification = std::variant<just::Premise, just::Axiom, just::AN, just::MP, just::SP, just::TND>;
std::string justification_name(const Justification& j);

struct ProofLine {
  Formula formula;
  Justification just;
};

struct Derivation {
  Logic logic = Logic::ipc();
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;
};

enum class LineFailure { None, BadReference, ShapeMismatch, AnOnNonAxiom, NotAnInstance, UnknownInstance, PremiseMismatch };
std::string_view failure_name(LineFailure f);

struct LineVerdict {
  LineFailure failure = LineFailure::None;
  std::string reason;
  bool ok() const { return failure == LineFailure::None; }
};

struct DerivationResult {
  std::vector<LineVerdict> lines;
  std::optional<Formula> conclusion;
  /// Valid when every line checks, Unknown when the only problems are
  /// inconclusive instance checks, Invalid otherwise.
  Verdict verdict() const;
};

DerivationResult check_derivation(const Derivation& d);

}  // namespace l5
