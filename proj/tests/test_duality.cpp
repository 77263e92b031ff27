#include <doctest.h>

#include <random>

#include "l5/duality.hpp"
#include "l5/generate.hpp"

using namespace l5;

namespace {

const Var X("x"), Y("y");

L5Model chain_model(std::size_t n) {
  HeytingAlgebra h = HeytingAlgebra::chain(n);
  return make_l5_model(h, ultrafilters(h).front());
}

std::vector<Formula> sample(std::size_t depth, std::size_t modal_depth, std::vector<std::string> vars) {
  return enumerate_formulas({atoms_with_bot(vars), depth, modal_depth});
}

}  // namespace

TEST_CASE("algebra_to_frame on the 3-chain") {
  L5Model m = chain_model(3);
  PrimeFilterFrame p = algebra_to_frame(m, {{"x", 1}}, {X});
  CHECK(p.frame.size() == 2);
  CHECK(p.filters[0] == bit(2));
  CHECK(p.filters[1] == (bit(1) | bit(2)));
  CHECK(p.w_top == 1);
  CHECK(p.g.at(X) == bit(1));
}

TEST_CASE("algebra_to_frame on the 2-element algebra") {
  L5Model m = chain_model(2);
  PrimeFilterFrame p = algebra_to_frame(m, {{"x", 0}}, {X});
  CHECK(p.frame.size() == 1);
  CHECK(p.w_top == 0);
  CHECK(p.g.at(X) == 0);
}

TEST_CASE("algebra_to_frame on the 4-chain with x at the second element") {
  // prime filters {3} < {2,3} < {1,2,3}; x = 1 lies only in the last one
  L5Model m = chain_model(4);
  PrimeFilterFrame p = algebra_to_frame(m, {{"x", 1}}, {X});
  REQUIRE(p.frame.size() == 3);
  CHECK(p.frame.is_linear());
  CHECK(p.filters == std::vector<ElementSet>{bit(3), bit(2) | bit(3), bit(1) | bit(2) | bit(3)});
  CHECK(p.g.at(X) == bit(2));
  CHECK(p.w_top == 2);
}

TEST_CASE("frame_to_algebra examples") {
  KripkeFrame c2 = KripkeFrame::chain(2);
  TruthSetModel t = frame_to_algebra(c2, FrameAssignment(c2, {{"x", bit(1)}}), 1, {X});
  CHECK(is_isomorphic(t.model.algebra(), HeytingAlgebra::chain(3)));
  CHECK(t.truth_sets == std::vector<WorldSet>{0, bit(1), 3});

  KripkeFrame pt = KripkeFrame::point();
  TruthSetModel b = frame_to_algebra(pt, FrameAssignment(pt, {{"x", 1}}), 0, {X});
  CHECK(b.model.algebra().size() == 2);

  KripkeFrame fk = KripkeFrame::fork(2);
  TruthSetModel f = frame_to_algebra(fk, FrameAssignment(fk, {{"x", bit(1)}, {"y", bit(2)}}), 1, {X, Y});
  CHECK(f.model.algebra().size() == 5);
  CHECK(has_dp(f.model.algebra()));
  CHECK_FALSE(is_linear(f.model.algebra()));

  CHECK_THROWS_AS((void)frame_to_algebra(c2, FrameAssignment(c2, {{"x", bit(1)}}), 0, {X}), InvalidStructure);
}

TEST_CASE("round trips report nothing") {
  CHECK(round_trip_check(chain_model(3), {{"x", 1}}, {X}, sample(3, 2, {"x"})).ok());
  CHECK(round_trip_check(chain_model(2), {{"x", 0}}, {X}, sample(3, 2, {"x"})).ok());

  HeytingAlgebra fork = upset_algebra(KripkeFrame::fork(2));
  L5Model fm = make_l5_model(fork, ultrafilters(fork).front());
  // up-sets sorted by mask: 0, {1}, {2}, {1,2}, W; the atoms are elements 1 and 2
  AlgebraAssignment gamma{{"x", 1}, {"y", 2}};
  REQUIRE(fork.meet(1, 2) == fork.bot());
  Formula linearity = parse("(x -> y) | (y -> x)");
  std::vector<Formula> s = sample(2, 1, {"x", "y"});
  s.push_back(linearity);
  RoundTripReport r = round_trip_check(fm, gamma, {X, Y}, s);
  CHECK(r.ok());
  CHECK(r.checked >= s.size());
  // Not top, so refuted at the bottom world; but w_T is maximal, where every
  // classical tautology holds, and TRUE contains the join of the two atoms.
  CHECK(eval(fm, gamma, linearity) != fork.top());
  CHECK(satisfies(fm, gamma, linearity));
  PrimeFilterFrame p = algebra_to_frame(fm, gamma, {X, Y});
  CHECK_FALSE(sat(p.frame, p.g, p.frame.bottom(), linearity));
  CHECK(sat(p.frame, p.g, p.w_top, linearity));
}

TEST_CASE("preservation and the inner claim on every small DP model") {
  std::mt19937_64 rng(37);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 2};
  for (const auto& h : enumerate_heyting(5, true))
    for (const Filter& u : ultrafilters(h)) {
      L5Model m = make_l5_model(h, u);
      for (Element a = 0; a < h.size(); ++a)
        for (Element b = 0; b < h.size(); ++b) {
          AlgebraAssignment gamma{{"x", a}, {"y", b}};
          PrimeFilterFrame p = algebra_to_frame(m, gamma, {X, Y});
          CHECK(p.filters[p.w_top] == u.members);
          for (int i = 0; i < 20; ++i) {
            Formula f = random_formula(rng, shape);
            const Element v = eval(m, gamma, f);
            CHECK(sat(p.frame, p.g, p.w_top, f) == satisfies(m, gamma, f));
            for (World w = 0; w < p.frame.size(); ++w) CHECK(sat(p.frame, p.g, w, f) == has(p.filters[w], v));
          }
        }
    }
}

TEST_CASE("frame_to_algebra preserves satisfaction on every small frame") {
  std::mt19937_64 rng(41);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 2};
  for (const auto& k : enumerate_frames(4, FrameClass::Any))
    for_each_frame_assignment(k, {X, Y}, [&](const FrameAssignment& g) {
      for (World w : members(k.maximal())) {
        TruthSetModel t = frame_to_algebra(k, g, static_cast<World>(w), {X, Y});
        CHECK(has_dp(t.model.algebra()));
        CHECK(t.model.algebra().size() >= 2);
        for (int i = 0; i < 10; ++i) {
          Formula f = random_formula(rng, shape);
          CHECK(satisfies(t.model, t.gamma, f) == sat(k, g, static_cast<World>(w), f));
          CHECK(t.truth_sets[eval(t.model, t.gamma, f)] == truth_set(k, g, f));
        }
      }
      return true;
    });
}

TEST_CASE("KC and linear algebras give the expected frames") {
  for (const auto& h : enumerate_heyting(6, true))
    for (const Filter& u : ultrafilters(h)) {
      PrimeFilterFrame p = algebra_to_frame(make_l5_model(h, u), {}, {});
      if (is_kc_algebra(h)) CHECK(count(p.frame.maximal()) == 1);
      if (is_linear(h)) CHECK(p.frame.is_linear());
    }
}

TEST_CASE("up-set algebras") {
  for (const auto& k : enumerate_frames(4, FrameClass::Any)) {
    HeytingAlgebra h = upset_algebra(k);
    CHECK(h.size() == upsets(k).size());
    CHECK(has_dp(h));
    CHECK(is_linear(h) == k.is_linear());
    CHECK(is_kc_algebra(h) == (count(k.maximal()) == 1));
    // prime filters of the up-set algebra are in bijection with the worlds
    CHECK(prime_filters(h).size() == k.size());
  }
  KripkeFrame c3 = KripkeFrame::chain(3);
  CHECK(upset_impl(c3, bit(2), 0) == 0);
  CHECK(upset_impl(c3, bit(1) | bit(2), bit(2)) == bit(2));
  CHECK(upset_impl(c3, bit(2), bit(1) | bit(2)) == c3.worlds());
  CHECK(definable_upsets(c3, {}) == std::vector<WorldSet>{0, c3.worlds()});
}

TEST_CASE("only the declared variables matter") {
  std::mt19937_64 rng(43);
  FormulaShape shape{atoms_with_bot({"x"}), 3, 2};
  for (const auto& k : enumerate_frames(4, FrameClass::Any))
    for_each_frame_assignment(k, {X, Y}, [&](const FrameAssignment& g) {
      const World w = static_cast<World>(members(k.maximal()).front());
      TruthSetModel narrow = frame_to_algebra(k, g, w, {X});
      TruthSetModel wide = frame_to_algebra(k, g, w, {X, Y});
      for (int i = 0; i < 5; ++i) {
        Formula f = random_formula(rng, shape);
        CHECK(satisfies(narrow.model, narrow.gamma, f) == satisfies(wide.model, wide.gamma, f));
      }
      return true;
    });
  for (const auto& h : enumerate_heyting(5, true)) {
    L5Model m = make_l5_model(h, ultrafilters(h).front());
    for (Element a = 0; a < h.size(); ++a) {
      PrimeFilterFrame narrow = algebra_to_frame(m, {{"x", a}, {"y", 0}}, {X});
      PrimeFilterFrame wide = algebra_to_frame(m, {{"x", a}, {"y", 0}}, {X, Y});
      CHECK(narrow.frame.size() == wide.frame.size());
      for (int i = 0; i < 5; ++i) {
        Formula f = random_formula(rng, shape);
        CHECK(sat(narrow.frame, narrow.g, narrow.w_top, f) == sat(wide.frame, wide.g, wide.w_top, f));
      }
    }
  }
}
