#include <doctest.h>

#include <random>

#include "l5/duality.hpp"
#include "l5/generate.hpp"
#include "l5/logics.hpp"
#include "oracles.hpp"

using namespace l5;

namespace {

const Var X("x"), Y("y");

/// The witness really falsifies f.
bool refutes(const Witness& w, const Formula& f) {
  if (const auto* k = std::get_if<KripkeWitness>(&w)) return !sat(k->frame, k->g, k->world, f);
  const auto& a = std::get<AlgebraWitness>(w);
  const Element v = eval(a.algebra, a.gamma, f);
  if (v != a.value) return false;
  if (!a.true_set) return v != a.algebra.top();
  L5Model m = make_l5_model(a.algebra, make_filter(a.algebra, *a.true_set));
  return !m.designated(v);
}

bool refutes_consequence(const Witness& w, const std::vector<Formula>& premises, const Formula& f) {
  const auto& a = std::get<AlgebraWitness>(w);
  L5Model m = make_l5_model(a.algebra, make_filter(a.algebra, *a.true_set));
  for (const auto& p : premises)
    if (!satisfies(m, a.gamma, p)) return false;
  return !satisfies(m, a.gamma, f);
}

bool chains_valid(const Formula& f, int from, int to) {
  for (int n = from; n <= to; ++n)
    if (!oracle::chain_valid(n, f, oracle::var_names(f))) return false;
  return true;
}

bool valid_on(const std::vector<oracle::Frame>& frames, const Formula& f) {
  for (const auto& fr : frames)
    if (!oracle::frame_valid(fr, f)) return false;
  return true;
}

std::vector<Formula> propositional(std::size_t depth) {
  return enumerate_formulas({atoms_with_bot({"x", "y"}), depth, 0});
}

}  // namespace

TEST_CASE("Logic registry") {
  CHECK(Logic::from_name("ht").kind() == LogicKind::HT);
  CHECK(Logic::from_name("KC").name() == "KC");
  CHECK(Logic::ht().axioms().front() == parse("x | (x -> y) | ~y"));
  CHECK(Logic::g().axioms().front() == parse("(x -> y) | (y -> x)"));
  CHECK(Logic::kc().axioms().front() == parse("~x | ~~x"));
  CHECK(Logic::ipc().axioms().empty());
  CHECK_THROWS_AS((void)Logic::from_name("S4"), InvalidStructure);
  CHECK_THROWS_AS((void)Logic::custom({parse("x")}), InvalidStructure);
  CHECK_THROWS_AS((void)Logic::custom({parse("box x -> x")}), InvalidStructure);
  CHECK_NOTHROW((void)Logic::custom({parse("((x -> y) -> x) -> x")}));
}

TEST_CASE("decide examples") {
  DecisionOutcome ht_axiom = decide(Logic::ht(), parse("x | (x -> y) | ~y"));
  CHECK(ht_axiom.verdict == Verdict::Valid);
  CHECK(ht_axiom.complete);

  Formula linearity = parse("(x -> y) | (y -> x)");
  DecisionOutcome ipc = decide(Logic::ipc(), linearity);
  CHECK(ipc.verdict == Verdict::Invalid);
  REQUIRE(ipc.witness.has_value());
  const auto& kw = std::get<KripkeWitness>(*ipc.witness);
  CHECK(canonical_key(kw.frame) == canonical_key(KripkeFrame::fork(2)));
  CHECK(refutes(*ipc.witness, linearity));

  DecisionOutcome lem = decide(Logic::ht(), parse("x | ~x"));
  CHECK(lem.verdict == Verdict::Invalid);
  const auto& aw = std::get<AlgebraWitness>(*lem.witness);
  CHECK(aw.algebra.size() == 3);
  CHECK(aw.gamma.at(X) == 1);

  DecisionOutcome wem = decide(Logic::kc(), parse("~x | ~~x"));
  CHECK(wem.verdict == Verdict::Valid);

  CHECK(decide(Logic::g(), linearity).verdict == Verdict::Valid);
  CHECK(decide(Logic::kc(), linearity).verdict == Verdict::Invalid);
  CHECK(decide(Logic::cpc(), parse("((x -> y) -> x) -> x")).verdict == Verdict::Valid);
  CHECK(decide(Logic::ipc(), parse("((x -> y) -> x) -> x")).verdict == Verdict::Invalid);
  CHECK(decide(Logic::ipc(), parse("~~(x | ~x)")).verdict == Verdict::Valid);
  CHECK_THROWS_AS((void)decide(Logic::ipc(), parse("box x")), InvalidStructure);
}

TEST_CASE("CPC, HT and G agree with the chain oracle") {
  for (const Formula& f : propositional(2)) {
    INFO(render(f));
    const auto vars = oracle::var_names(f);
    CHECK((decide(Logic::cpc(), f).verdict == Verdict::Valid) == oracle::chain_valid(2, f, vars));
    CHECK((decide(Logic::ht(), f).verdict == Verdict::Valid) == oracle::chain_valid(3, f, vars));
    CHECK((decide(Logic::g(), f).verdict == Verdict::Valid) == chains_valid(f, 2, 6));
  }
  std::mt19937_64 rng(43);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 0};
  for (int i = 0; i < 3000; ++i) {
    Formula f = random_formula(rng, shape);
    INFO(render(f));
    CHECK((decide(Logic::g(), f).verdict == Verdict::Valid) == chains_valid(f, 2, 6));
  }
}

TEST_CASE("G on three variables agrees with longer chains") {
  std::mt19937_64 rng(47);
  FormulaShape shape{atoms_with_bot({"x", "y", "z"}), 4, 0};
  for (int i = 0; i < 400; ++i) {
    Formula f = random_formula(rng, shape);
    CHECK((decide(Logic::g(), f).verdict == Verdict::Valid) == chains_valid(f, 2, 7));
  }
}

TEST_CASE("HT matrix agrees with frames of at most two worlds") {
  const std::vector<oracle::Frame> small{oracle::point(), oracle::two_chain()};
  for (const Formula& f : propositional(2))
    CHECK((decide(Logic::ht(), f).verdict == Verdict::Valid) == valid_on(small, f));
  std::mt19937_64 rng(53);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 0};
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng, shape);
    CHECK((decide(Logic::ht(), f).verdict == Verdict::Valid) == valid_on(small, f));
  }
}

TEST_CASE("IPC verdicts against frames") {
  const auto frames = enumerate_frames(4, FrameClass::Any);
  std::mt19937_64 rng(59);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 4, 0};
  int valid = 0, invalid = 0;
  for (int i = 0; i < 1500; ++i) {
    Formula f = random_formula(rng, shape);
    INFO(render(f));
    DecisionOutcome d = decide(Logic::ipc(), f);
    CHECK(d.complete);
    if (d.verdict == Verdict::Valid) {
      ++valid;
      for (const auto& k : frames) CHECK(frame_valid(k, f));
    } else {
      ++invalid;
      REQUIRE(d.verdict == Verdict::Invalid);
      if (d.witness) CHECK(refutes(*d.witness, f));
      // classical failures are always caught on the point
      if (!oracle::chain_valid(2, f, oracle::var_names(f))) CHECK(d.witness.has_value());
    }
  }
  CHECK(valid > 50);
  CHECK(invalid > 50);
}

TEST_CASE("IPC knows its textbook theorems and non-theorems") {
  for (const char* s : {"x -> x", "x -> y -> x", "(x -> y -> z) -> (x -> y) -> x -> z", "~~~x -> ~x",
                        "~(x | y) <-> ~x & ~y", "(x -> y) -> ~y -> ~x", "~~(((x -> y) -> x) -> x)",
                        "(x & y -> z) <-> (x -> y -> z)", "x | y -> y | x"})
    CHECK(decide(Logic::ipc(), parse(s)).verdict == Verdict::Valid);
  for (const char* s : {"x | ~x", "~~x -> x", "~x | ~~x", "(x -> y) | (y -> x)", "((x -> y) -> x) -> x",
                        "~(x & y) -> ~x | ~y", "(~x -> y | z) -> (~x -> y) | (~x -> z)"})
    CHECK(decide(Logic::ipc(), parse(s)).verdict == Verdict::Invalid);
}

TEST_CASE("KC verdicts are sound") {
  const auto single = enumerate_frames(5, FrameClass::SingleMaximal);
  std::mt19937_64 rng(61);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 0};
  for (int i = 0; i < 400; ++i) {
    Formula f = random_formula(rng, shape);
    DecisionOutcome d = decide(Logic::kc(), f);
    if (d.verdict == Verdict::Valid)
      for (const auto& k : single) CHECK(frame_valid(k, f));
    if (d.verdict == Verdict::Invalid) {
      REQUIRE(d.witness.has_value());
      CHECK(refutes(*d.witness, f));
    }
    if (d.verdict == Verdict::Unknown) CHECK(d.bound_used.has_value());
  }
  CHECK(decide(Logic::kc(), parse("~(x & y) -> ~x | ~y")).verdict == Verdict::Valid);
}

TEST_CASE("inclusion chain KC, G, HT") {
  std::mt19937_64 rng(67);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 0};
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, shape);
    if (decide(Logic::kc(), f).verdict == Verdict::Valid) CHECK(decide(Logic::g(), f).verdict == Verdict::Valid);
    if (decide(Logic::g(), f).verdict == Verdict::Valid) CHECK(decide(Logic::ht(), f).verdict == Verdict::Valid);
    if (decide(Logic::ipc(), f).verdict == Verdict::Valid) CHECK(decide(Logic::kc(), f).verdict == Verdict::Valid);
    if (decide(Logic::ht(), f).verdict == Verdict::Valid) CHECK(decide(Logic::cpc(), f).verdict == Verdict::Valid);
  }
}

TEST_CASE("reduct_class_check examples") {
  HeytingAlgebra fork = upset_algebra(KripkeFrame::fork(2));
  CHECK(reduct_class_check(Logic::ht(), HeytingAlgebra::chain(3)));
  CHECK_FALSE(reduct_class_check(Logic::ht(), HeytingAlgebra::chain(4)));
  CHECK(reduct_class_check(Logic::g(), HeytingAlgebra::chain(4)));
  CHECK_FALSE(reduct_class_check(Logic::g(), fork));
  CHECK_FALSE(reduct_class_check(Logic::kc(), fork));
  CHECK(reduct_class_check(Logic::ipc(), fork));
  CHECK(reduct_class_check(Logic::cpc(), HeytingAlgebra::boolean(1)));
  CHECK_FALSE(reduct_class_check(Logic::cpc(), HeytingAlgebra::chain(3)));
}

TEST_CASE("characterizations agree with the semantic membership test") {
  for (const auto& h : enumerate_heyting(6, true))
    for (const Logic& l : {Logic::ht(), Logic::g(), Logic::kc(), Logic::cpc(), Logic::ipc()}) {
      INFO(l.name(), " size ", h.size());
      CHECK(reduct_class_check(l, h) == satisfies_axioms(l, h));
    }
}

TEST_CASE("l5_valid examples") {
  DecisionOutcome ax = l5_valid(Logic::ipc(), {}, parse("box x -> x"));
  CHECK(ax.verdict == Verdict::Valid);

  DecisionOutcome up = l5_valid(Logic::ipc(), {}, parse("x -> box x"), 3);
  REQUIRE(up.verdict == Verdict::Invalid);
  const auto& w = std::get<AlgebraWitness>(*up.witness);
  CHECK(w.algebra.size() == 3);
  CHECK(w.gamma.at(X) == 1);
  CHECK(w.true_set == std::optional<ElementSet>(bit(1) | bit(2)));
  CHECK(refutes(*up.witness, parse("x -> box x")));

  DecisionOutcome collapse = l5_valid(Logic::cpc(), {}, parse("x <-> box x"), 5);
  CHECK(collapse.verdict != Verdict::Invalid);
  CHECK(l5_algebras(Logic::cpc(), 6).size() == 1);

  DecisionOutcome prem = l5_valid(Logic::ipc(), {parse("box x")}, parse("x"));
  CHECK(prem.verdict == Verdict::Valid);
  DecisionOutcome noprem = l5_valid(Logic::ipc(), {parse("x")}, parse("box x"));
  REQUIRE(noprem.verdict == Verdict::Invalid);
  CHECK(refutes_consequence(*noprem.witness, {parse("x")}, parse("box x")));

  DecisionOutcome open = l5_valid(Logic::ipc(), {}, parse("box(x & y) -> box y & box x"));
  CHECK(open.verdict != Verdict::Invalid);
  if (open.verdict == Verdict::Unknown) CHECK(open.bound_used == std::optional<std::size_t>(5));
}

TEST_CASE("l5_valid witnesses re-validate") {
  std::mt19937_64 rng(71);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 2};
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, shape);
    DecisionOutcome d = l5_valid(Logic::ipc(), {}, f, 4);
    if (d.verdict == Verdict::Invalid) {
      REQUIRE(d.witness.has_value());
      CHECK(refutes(*d.witness, f));
    } else {
      // no countermodel among the DP algebras up to 4 elements: check with the frames of
      // the same models
      for (const auto& h : enumerate_heyting(4, true))
        for (const Filter& u : ultrafilters(h)) {
          L5Model m = make_l5_model(h, u);
          for (Element a = 0; a < h.size(); ++a)
            for (Element b = 0; b < h.size(); ++b) CHECK(satisfies(m, {{"x", a}, {"y", b}}, f));
        }
    }
  }
}

TEST_CASE("defining axioms are equal to top in their own L5 logic") {
  const std::vector<std::pair<Logic, const char*>> cases{{Logic::ht(), "x | (x -> y) | ~y"},
                                                          {Logic::g(), "(x -> y) | (y -> x)"},
                                                          {Logic::kc(), "~x | ~~x"},
                                                          {Logic::cpc(), "x | ~x"}};
  for (const auto& [l, s] : cases) {
    Formula a = parse(s);
    CHECK(l5_valid(l, {}, Formula::ident(a, parse("top")), 5).verdict != Verdict::Invalid);
    CHECK(l5_valid(Logic::ipc(), {}, Formula::ident(a, parse("top")), 5).verdict == Verdict::Invalid);
  }
}

TEST_CASE("l5_algebras respect the characterizations") {
  for (const auto& h : l5_algebras(Logic::ht(), 6)) CHECK(h.size() <= 3);
  for (const auto& h : l5_algebras(Logic::g(), 6)) CHECK(is_linear(h));
  for (const auto& h : l5_algebras(Logic::kc(), 6)) CHECK(is_kc_algebra(h));
  CHECK(l5_algebras(Logic::ht(), 6).size() == 2);
  CHECK(l5_algebras(Logic::g(), 6).size() == 5);
}

TEST_CASE("boxed_reduction") {
  CHECK(boxed_reduction(Logic::ht(), {parse("x")}, parse("~~x")).verdict == Verdict::Valid);
  DecisionOutcome lem = boxed_reduction(Logic::ipc(), {}, parse("x | ~x"));
  CHECK(lem.verdict == Verdict::Invalid);
  CHECK(lem.witness.has_value());
  CHECK(boxed_reduction(Logic::cpc(), {}, parse("x | ~x")).verdict == Verdict::Valid);
  CHECK(boxed_reduction(Logic::ipc(), {parse("x"), parse("x -> y")}, parse("y")).verdict == Verdict::Valid);
  CHECK_THROWS_AS((void)boxed_reduction(Logic::ipc(), {parse("box x")}, parse("x")), InvalidStructure);
}

TEST_CASE("boxed theorems have no countermodel and boxed non-theorems do") {
  std::mt19937_64 rng(73);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 0};
  for (const Logic& l : {Logic::ht(), Logic::g(), Logic::cpc()})
    for (int i = 0; i < 60; ++i) {
      Formula f = random_formula(rng, shape);
      DecisionOutcome d = decide(l, f);
      DecisionOutcome b = l5_valid(l, {}, Formula::box(f), 5);
      INFO(l.name(), " ", render(f));
      if (d.verdict == Verdict::Valid) CHECK(b.verdict != Verdict::Invalid);
      if (d.verdict == Verdict::Invalid) CHECK(b.verdict == Verdict::Invalid);
    }
}

TEST_CASE("strong_equiv_ht") {
  DecisionOutcome a = strong_equiv_ht(parse("x"), parse("~~x"));
  REQUIRE(a.verdict == Verdict::Invalid);
  const auto& w = std::get<AlgebraWitness>(*a.witness);
  CHECK(w.gamma.at(X) == 1);
  CHECK(strong_equiv_ht(parse("x | ~x"), parse("top")).verdict == Verdict::Invalid);
  CHECK(strong_equiv_ht(parse("x -> y"), parse("x -> y")).verdict == Verdict::Valid);
  CHECK(strong_equiv_ht(parse("~(x | y)"), parse("~x & ~y")).verdict == Verdict::Valid);
  CHECK(strong_equiv_ht(parse("~x | ~~x"), parse("top")).verdict == Verdict::Valid);
}

TEST_CASE("bottom-world consequence on each logic's frames matches decide") {
  std::mt19937_64 rng(79);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 2, 0};
  for (const Logic& l : {Logic::ht(), Logic::g(), Logic::cpc(), Logic::ipc()}) {
    const auto frames = logic_frames(l, 4);
    for (int i = 0; i < 150; ++i) {
      Formula p = random_formula(rng, shape), f = random_formula(rng, shape);
      DecisionOutcome d = decide(l, Formula::implies(p, f));
      const bool bc = bottom_consequence(frames, {p}, f);
      INFO(l.name(), " ", render(p), " / ", render(f));
      if (d.verdict == Verdict::Valid) CHECK(bc);
      // IPC frames are cut at four worlds, so only the complete classes are compared both ways
      if (l.kind() != LogicKind::IPC && d.verdict == Verdict::Invalid) CHECK_FALSE(bc);
    }
  }
}

TEST_CASE("custom logics") {
  Logic arrow_law = Logic::custom({parse("((x -> y) -> x) -> x")});
  CHECK(decide(arrow_law, parse("x | ~x")).verdict != Verdict::Invalid);
  CHECK(decide(arrow_law, parse("((x -> y) -> x) -> x")).verdict == Verdict::Valid);
  Logic wem = Logic::custom({parse("~x | ~~x")});
  CHECK(decide(wem, parse("(x -> y) | (y -> x)")).verdict == Verdict::Invalid);
  CHECK(decide(wem, parse("x | ~x")).verdict == Verdict::Invalid);
}
