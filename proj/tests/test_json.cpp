#include <doctest.h>

#include <random>

#include "l5/duality.hpp"
#include "l5/generate.hpp"
#include "l5/json_io.hpp"
#include "l5/proofkit.hpp"

using namespace l5;

namespace {

/// Rebuilds the witness from its JSON alone and confirms that it falsifies its formula.
bool witness_holds(const Json& j) {
  const Formula f = parse(j.at("formula").get<std::string>());
  if (j.at("kind") == "frame") {
    KripkeFrame k = frame_from_json(j.at("frame"));
    FrameAssignment g = frame_assignment_from_json(k, j.at("assignment"));
    return !sat(k, g, j.at("world").get<World>(), f);
  }
  const Json& a = j.at("algebra");
  if (a.contains("ultrafilter")) {
    L5Model m = model_from_json(a);
    AlgebraAssignment gamma = algebra_assignment_from_json(m.algebra(), j.at("assignment"));
    return !satisfies(m, gamma, f) && eval(m, gamma, f) == j.at("value").get<Element>();
  }
  HeytingAlgebra h = algebra_from_json(a);
  AlgebraAssignment gamma = algebra_assignment_from_json(h, j.at("assignment"));
  return eval(h, gamma, f) != h.top();
}

}  // namespace

TEST_CASE("algebras and models round trip") {
  for (const auto& h : enumerate_heyting(6, false)) {
    Json j = to_json(h);
    HeytingAlgebra back = algebra_from_json(Json::parse(j.dump()));
    CHECK(back.size() == h.size());
    CHECK(back.leq_table() == h.leq_table());
    for (Element a = 0; a < h.size(); ++a)
      for (Element b = 0; b < h.size(); ++b) CHECK(back.impl(a, b) == h.impl(a, b));
    if (has_dp(h))
      for (const Filter& u : ultrafilters(h)) {
        L5Model m = make_l5_model(h, u);
        L5Model mb = model_from_json(Json::parse(to_json(m).dump()));
        CHECK(mb.true_set() == m.true_set());
        CHECK(mb.box_table() == m.box_table());
      }
  }
}

TEST_CASE("algebra input is cross-checked") {
  Json j = to_json(HeytingAlgebra::boolean(2));
  j["impl"] = Json::array();
  for (int a = 0; a < 4; ++a) j["impl"].push_back(Json::array({3, 3, 3, 3}));
  CHECK_THROWS_AS((void)algebra_from_json(j), InvalidStructure);

  Json trivial = {{"size", 1}, {"leq", {{true}}}, {"bot", 0}, {"top", 0}};
  CHECK_THROWS_AS((void)algebra_from_json(trivial), InvalidStructure);

  Json no_dp = to_json(HeytingAlgebra::boolean(2));
  no_dp["ultrafilter"] = {1, 3};
  CHECK_THROWS_AS((void)model_from_json(no_dp), InvalidStructure);

  Json bad_filter = to_json(HeytingAlgebra::chain(3));
  bad_filter["ultrafilter"] = {2};
  CHECK_THROWS_AS((void)model_from_json(bad_filter), InvalidStructure);

  CHECK_THROWS((void)algebra_from_json(Json{{"size", 2}}));
}

TEST_CASE("frames and assignments round trip") {
  for (const auto& k : enumerate_frames(5, FrameClass::Any)) {
    KripkeFrame back = frame_from_json(Json::parse(to_json(k).dump()));
    CHECK(back.size() == k.size());
    for (World w = 0; w < k.size(); ++w) CHECK(back.successors(w) == k.successors(w));
    for (WorldSet s : upsets(k)) {
      FrameAssignment g(k, {{"x", s}});
      CHECK(frame_assignment_from_json(back, Json::parse(to_json(g).dump())) == g);
    }
  }
  KripkeFrame c = KripkeFrame::chain(2);
  CHECK_THROWS_AS((void)frame_assignment_from_json(c, Json{{"x", {0}}}), InvalidStructure);
  CHECK_THROWS_AS((void)frame_from_json(Json{{"worlds", 2}, {"order", Json::array()}}), InvalidStructure);
  // full relation input is accepted too
  KripkeFrame full = frame_from_json(Json{{"worlds", 2}, {"order", {{0, 0}, {0, 1}, {1, 1}}}});
  CHECK(full.related(0, 1));

  HeytingAlgebra h = HeytingAlgebra::chain(3);
  AlgebraAssignment gamma{{"x", 1}, {"y", 2}};
  CHECK(algebra_assignment_from_json(h, Json::parse(to_json(gamma).dump())) == gamma);
  CHECK_THROWS_AS((void)algebra_assignment_from_json(h, Json{{"x", 7}}), InvalidStructure);
}

TEST_CASE("decision witnesses re-validate from their JSON") {
  std::mt19937_64 rng(97);
  FormulaShape shape{atoms_with_bot({"x", "y"}), 3, 0};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, shape);
    for (const Logic& l : {Logic::ipc(), Logic::ht(), Logic::g(), Logic::kc(), Logic::cpc()}) {
      DecisionOutcome d = decide(l, f);
      Json j = Json::parse(to_json(d, f).dump());
      CHECK(j.at("verdict") == std::string(verdict_name(d.verdict)));
      if (d.verdict == Verdict::Unknown) CHECK(j.contains("bound"));
      if (!j.contains("witness")) continue;
      INFO(l.name(), " ", render(f));
      CHECK(witness_holds(j.at("witness")));
      ++checked;
    }
  }
  CHECK(checked > 100);

  FormulaShape modal{atoms_with_bot({"x", "y"}), 3, 2};
  for (int i = 0; i < 100; ++i) {
    Formula f = random_formula(rng, modal);
    DecisionOutcome d = l5_valid(Logic::ipc(), {}, f, 4);
    if (d.witness) CHECK(witness_holds(Json::parse(to_json(d, f).dump()).at("witness")));
  }
}

TEST_CASE("duality witnesses") {
  HeytingAlgebra c4 = HeytingAlgebra::chain(4);
  L5Model m = make_l5_model(c4, ultrafilters(c4).front());
  PrimeFilterFrame p = algebra_to_frame(m, {{"x", 1}}, {Var("x")});
  Json j = to_json(p, m);
  CHECK(j.at("w_T") == 2);
  CHECK(j.at("membership").size() == 3);
  CHECK(j.at("membership")[0] == Json::array({false, false, false, true}));
  KripkeFrame k = frame_from_json(j.at("frame"));
  FrameAssignment g = frame_assignment_from_json(k, j.at("assignment"));
  CHECK(g == p.g);

  KripkeFrame c2 = KripkeFrame::chain(2);
  TruthSetModel t = frame_to_algebra(c2, FrameAssignment(c2, {{"x", bit(1)}}), 1, {Var("x")});
  Json tj = to_json(t, c2, 1);
  L5Model back = model_from_json(tj.at("model"));
  CHECK(back.true_set() == t.model.true_set());
  CHECK(tj.at("truth_sets").size() == 3);
}

TEST_CASE("derivations round trip") {
  Derivation d;
  d.logic = Logic::cpc();
  d.premises = {parse("box x")};
  d.lines = {{parse("box x"), just::Premise{1}},
             {parse("box x -> x"), just::Axiom{Scheme::II}},
             {parse("x"), just::MP{1, 2}},
             {parse("x | ~x"), just::TND{}},
             {parse("box(box x -> x)"), just::AN{2}},
             {parse("(x == y) -> (box x == box y)"), just::SP{}}};
  Derivation back = derivation_from_json(Json::parse(to_json(d).dump()));
  CHECK(back.logic.name() == "CPC");
  CHECK(back.premises == d.premises);
  REQUIRE(back.lines.size() == d.lines.size());
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    CHECK(back.lines[i].formula == d.lines[i].formula);
    CHECK(justification_name(back.lines[i].just) == justification_name(d.lines[i].just));
  }
  DerivationResult r = check_derivation(back);
  CHECK(r.verdict() == Verdict::Valid);
  Json rj = to_json(r, back);
  CHECK(rj.at("verdict") == "Valid");

  Json custom = {{"logic", {{"axioms", {"~x | ~~x"}}}}, {"premises", Json::array()},
                 {"lines", {{{"formula", "~y | ~~y"}, {"just", {{"kind", "Axiom"}, {"scheme", "i"}}}}}}};
  CHECK(check_derivation(derivation_from_json(custom)).verdict() == Verdict::Valid);
  CHECK_THROWS((void)derivation_from_json(Json{{"logic", "S5"}, {"lines", Json::array()}}));
}
