#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l5/assignment.hpp"
#include "l5/bits.hpp"
#include "l5/formula.hpp"

namespace l5 {

using Element = std::uint32_t;
using ElementSet = Mask;

/// One failed law, with the elements (or worlds) that witness the failure.
struct Violation {
  std::string law;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

/// Unchecked input: an order table plus optional operation tables that, when
/// present, are compared against the ones the order determines.
struct RawTables {
  std::size_t size = 0;
  std::vector<std::vector<bool>> leq;
  Element bot = 0;
  Element top = 0;
  std::optional<std::vector<std::vector<Element>>> meet;
  std::optional<std::vector<std::vector<Element>>> join;
  std::optional<std::vector<std::vector<Element>>> impl;
};

/// Lists every violated law: partial order, bounds, lattice, distributivity,
/// relative pseudo-complement, non-triviality, and agreement of any supplied
/// operation table.
ValidationReport check_heyting(const RawTables& raw);

/// Finite non-trivial Heyting algebra on elements 0..size-1 with precomputed tables.
class HeytingAlgebra {
public:
  /// Throws InvalidStructure carrying check_heyting's summary on failure.
  static HeytingAlgebra from_raw(const RawTables& raw);
  static HeytingAlgebra from_order(const std::vector<std::vector<bool>>& leq, Element bot, Element top);

  /// 0 < 1 < ... < n-1.
  static HeytingAlgebra chain(std::size_t n);
  /// Subsets of {0..atoms-1}; element i is the subset with bitmask i.
  static HeytingAlgebra boolean(std::size_t atoms);

  std::size_t size() const noexcept { return n_; }
  Element bot() const noexcept { return bot_; }
  Element top() const noexcept { return top_; }
  ElementSet all() const noexcept { return full_mask(n_); }

  bool leq(Element a, Element b) const { return leq_[a * n_ + b]; }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element impl(Element a, Element b) const { return impl_[a * n_ + b]; }
  Element neg(Element a) const { return impl(a, bot_); }
  /// Forced box of an L5-model: top stays top, everything else goes to bot.
  Element box(Element a) const { return a == top_ ? top_ : bot_; }

  /// {b : a <= b}
  ElementSet up(Element a) const { return up_[a]; }
  std::vector<std::vector<bool>> leq_table() const;
  RawTables raw() const;

private:
  HeytingAlgebra() = default;
  std::size_t n_ = 0;
  Element bot_ = 0;
  Element top_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_, join_, impl_;
  std::vector<ElementSet> up_;
};

/// Disjunction property: join(a, b) == top only if a == top or b == top.
bool has_dp(const HeytingAlgebra& h);
bool is_linear(const HeytingAlgebra& h);
/// DP plus: a > bot and b > bot imply meet(a, b) > bot.
bool is_kc_algebra(const HeytingAlgebra& h);

/// Order-isomorphism invariant: lexicographically least leq matrix over all
/// relabelings sending bot to 0 and top to size-1.
std::vector<bool> canonical_key(const HeytingAlgebra& h);
bool is_isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b);

// ---- filters -------------------------------------------------------------

struct Filter {
  ElementSet members = 0;
  bool is_proper = false;
  bool is_prime = false;
  bool is_ultra = false;

  bool contains(Element e) const { return has(members, e); }
  friend bool operator==(const Filter&, const Filter&) = default;
};

/// Upward closed, meet closed, contains top.
bool is_filter(const HeytingAlgebra& h, ElementSet s);
/// Smallest filter containing s.
ElementSet generated_filter(const HeytingAlgebra& h, ElementSet s);
/// Validates s and computes its flags. Throws InvalidStructure if s is not a filter.
Filter make_filter(const HeytingAlgebra& h, ElementSet s);

/// All proper filters (resp. prime, ultra), sorted by member bitmask.
std::vector<Filter> filters(const HeytingAlgebra& h);
std::vector<Filter> prime_filters(const HeytingAlgebra& h);
std::vector<Filter> ultrafilters(const HeytingAlgebra& h);

struct Quotient {
  HeytingAlgebra algebra;
  std::vector<Element> projection;  // element of h -> class index
};

/// h modulo a ~ b :<=> impl(a,b) in f and impl(b,a) in f. Classes are numbered
/// by their least member. Throws InvalidStructure for improper filters.
Quotient quotient(const HeytingAlgebra& h, const Filter& f);

// ---- L5 models -----------------------------------------------------------

using AlgebraAssignment = VarMap<Element>;

/// Heyting algebra with DP, a designated ultrafilter TRUE and the forced box.
class L5Model {
public:
  const HeytingAlgebra& algebra() const noexcept { return algebra_; }
  ElementSet true_set() const noexcept { return true_set_; }
  bool designated(Element e) const { return has(true_set_, e); }
  Element box(Element e) const { return box_[e]; }
  const std::vector<Element>& box_table() const noexcept { return box_; }
  /// Results of re-checking the four truth conditions at construction.
  const std::array<bool, 4>& truth_conditions() const noexcept { return conditions_; }

private:
  friend L5Model make_l5_model(HeytingAlgebra h, const Filter& u);
  explicit L5Model(HeytingAlgebra h) : algebra_(std::move(h)) {}
  HeytingAlgebra algebra_;
  ElementSet true_set_ = 0;
  std::vector<Element> box_;
  std::array<bool, 4> conditions_{};
};

/// Throws InvalidStructure when h lacks DP or u is not an ultrafilter of h.
L5Model make_l5_model(HeytingAlgebra h, const Filter& u);
L5Model make_l5_model(HeytingAlgebra h, ElementSet ultrafilter);

/// Canonical extension of gamma. On a bare algebra, box is the forced one.
/// Throws UnboundVariable.
Element eval(const HeytingAlgebra& h, const AlgebraAssignment& gamma, const Formula& f);
Element eval(const L5Model& m, const AlgebraAssignment& gamma, const Formula& f);
bool satisfies(const L5Model& m, const AlgebraAssignment& gamma, const Formula& f);

/// Distinct subformulas in post-order with their values.
std::vector<std::pair<Formula, Element>> eval_trace(const L5Model& m, const AlgebraAssignment& gamma,
                                                    const Formula& f);

/// Every Heyting algebra with 2..max_size elements, one per isomorphism class,
/// labeled canonically; ordered by size then canonical key.
std::vector<HeytingAlgebra> enumerate_heyting(std::size_t max_size, bool require_dp);

/// All element values, for assignment sweeps.
std::vector<Element> elements(const HeytingAlgebra& h);

}  // namespace l5
