// l5: command-line front end for the L5 workbench.
//
// Exit codes: 0 valid/true/accepted, 1 invalid/false/rejected, 2 unknown,
// 3 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "l5/duality.hpp"
#include "l5/generate.hpp"
#include "l5/json_io.hpp"
#include "l5/logics.hpp"
#include "l5/proofkit.hpp"

using namespace l5;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUnknown = 2, kUsage = 3 };

struct Globals {
  bool json = false;
  bool trace = false;
  std::optional<std::size_t> max_size;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Valid: return kTrue;
    case Verdict::Invalid: return kFalse;
    case Verdict::Unknown: return kUnknown;
  }
  return kUsage;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidStructure("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidStructure("'" + path + "' is not valid JSON: " + e.what());
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string set_text(Mask m) {
  std::string s = "{";
  bool first = true;
  for (auto i : members(m)) {
    s += (first ? "" : ", ") + std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::string assignment_text(const AlgebraAssignment& gamma) {
  std::string s;
  for (const auto& [v, e] : gamma.entries()) s += (s.empty() ? "" : ", ") + v.name() + "=" + std::to_string(e);
  return s.empty() ? "(no variables)" : s;
}

std::string assignment_text(const FrameAssignment& g) {
  std::string s;
  for (const auto& [v, w] : g.values().entries()) s += (s.empty() ? "" : ", ") + v.name() + "=" + set_text(w);
  return s.empty() ? "(no variables)" : s;
}

std::string frame_text(const KripkeFrame& f) {
  std::string s = std::to_string(f.size()) + " world(s), covers";
  auto covers = f.cover_pairs();
  if (covers.empty()) s += " none";
  for (const auto& [a, b] : covers) s += " " + std::to_string(a) + "<" + std::to_string(b);
  return s;
}

void print_witness_text(const Witness& w) {
  if (const auto* k = std::get_if<KripkeWitness>(&w)) {
    std::cout << "countermodel: frame " << frame_text(k->frame) << "; " << assignment_text(k->g) << "; fails at world "
              << k->world << "\n";
  } else {
    const auto& a = std::get<AlgebraWitness>(w);
    std::cout << "countermodel: " << a.algebra.size() << "-element algebra";
    if (a.true_set) std::cout << " with TRUE=" << set_text(*a.true_set);
    std::cout << "; " << assignment_text(a.gamma) << "; value " << a.value << "\n";
  }
}

void print_outcome(const Globals& g, const DecisionOutcome& d, const Formula& f) {
  if (g.json) {
    print_json(to_json(d, f));
    return;
  }
  std::cout << verdict_name(d.verdict);
  if (d.verdict == Verdict::Unknown && d.bound_used) std::cout << " (bound " << *d.bound_used << ")";
  std::cout << "\n";
  std::cout << "method: " << d.method << (d.complete ? " [complete]" : "") << "\n";
  if (d.witness) print_witness_text(*d.witness);
  for (const auto& n : d.notes) std::cout << "note: " << n << "\n";
}

Logic make_logic(const std::string& name, const std::vector<std::string>& axioms) {
  if (axioms.empty()) return Logic::from_name(name);
  std::vector<Formula> fs;
  for (const auto& a : axioms) fs.push_back(parse(a));
  return Logic::custom(std::move(fs));
}

std::vector<Var> keys(const AlgebraAssignment& gamma) {
  std::vector<Var> out;
  for (const auto& [v, e] : gamma.entries()) out.push_back(v);
  return out;
}

std::vector<Var> keys(const FrameAssignment& g) {
  std::vector<Var> out;
  for (const auto& [v, s] : g.values().entries()) out.push_back(v);
  return out;
}

// Post-order list of distinct subformulas.
void subformulas(const Formula& f, std::vector<Formula>& out) {
  switch (f.op()) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
      subformulas(f.left(), out);
      subformulas(f.right(), out);
      break;
    case Op::Box: subformulas(f.inner(), out); break;
    default: break;
  }
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
}

World default_top_world(const KripkeFrame& f) { return static_cast<World>(members(f.maximal()).front()); }

void print_report(const ValidationReport& r) {
  for (const auto& v : r.violations) {
    std::cout << "violation: " << v.law;
    if (!v.witness.empty()) {
      std::cout << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) std::cout << (i ? ", " : "") << v.witness[i];
      std::cout << ")";
    }
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n";
  }
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

Json report_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back({{"law", v.law}, {"witness", v.witness}, {"detail", v.detail}});
  j["violations"] = vs;
  j["notes"] = r.notes;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the modal logic L5 and its parametrized family L5(I)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print JSON instead of text");
  app.add_flag("--trace", g.trace, "Print evaluation traces");
  app.add_option("--max-size", g.max_size, "Search bound (default 5 for algebras, 6 for frames)");

  std::function<int()> action;

  // parse
  std::string text;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a formula and print its canonical form");
  parse_cmd->add_option("formula", text, "Formula")->required();
  parse_cmd->callback([&] {
    action = [&] {
      Formula f = parse(text);
      if (g.json) {
        Json vars = Json::array();
        for (Var v : f.variables()) vars.push_back(v.name());
        print_json({{"rendered", render(f)},
                    {"core", render(f.with_surface(Surface::Core))},
                    {"propositional", f.is_propositional()},
                    {"depth", f.depth()},
                    {"modal_depth", f.modal_depth()},
                    {"variables", vars}});
      } else {
        std::cout << render(f) << "\n";
      }
      return kTrue;
    };
  });

  // decide / countermodel
  std::string logic_name = "IPC";
  std::vector<std::string> axioms;
  auto* decide_cmd = app.add_subcommand("decide", "Decide validity of a propositional formula in a logic");
  decide_cmd->add_option("--logic", logic_name, "IPC, HT, G, KC or CPC");
  decide_cmd->add_option("--axiom", axioms, "Extra axiom scheme (defines a custom logic over IPC)");
  decide_cmd->add_option("formula", text, "Formula")->required();
  decide_cmd->callback([&] {
    action = [&] {
      Formula f = parse(text);
      DecideOptions opts;
      if (g.max_size) opts.frame_bound = *g.max_size;
      DecisionOutcome d = decide(make_logic(logic_name, axioms), f, opts);
      print_outcome(g, d, f);
      return exit_for(d.verdict);
    };
  });

  auto* cm_cmd = app.add_subcommand("countermodel", "Print a countermodel as JSON if one exists");
  cm_cmd->add_option("--logic", logic_name, "IPC, HT, G, KC or CPC");
  cm_cmd->add_option("--axiom", axioms, "Extra axiom scheme");
  cm_cmd->add_option("formula", text, "Formula")->required();
  cm_cmd->callback([&] {
    action = [&] {
      Formula f = parse(text);
      DecideOptions opts;
      if (g.max_size) opts.frame_bound = *g.max_size;
      DecisionOutcome d = decide(make_logic(logic_name, axioms), f, opts);
      if (d.witness) {
        print_json(witness_to_json(*d.witness, f));
      } else if (g.json) {
        print_json(to_json(d, f));
      } else if (d.verdict == Verdict::Valid) {
        std::cout << "Valid: no countermodel\n";
      } else {
        std::cout << verdict_name(d.verdict) << ": no countermodel found";
        if (d.bound_used) std::cout << " (bound " << *d.bound_used << ")";
        std::cout << "\n";
      }
      return exit_for(d.verdict);
    };
  });

  // l5-valid
  std::vector<std::string> premises;
  auto* l5_cmd = app.add_subcommand("l5-valid", "Search L5(I)-models for a countermodel to a consequence");
  l5_cmd->add_option("--logic", logic_name, "Parameter logic I");
  l5_cmd->add_option("--axiom", axioms, "Extra axiom scheme");
  l5_cmd->add_option("--premise", premises, "Premise (repeatable)");
  l5_cmd->add_option("formula", text, "Formula")->required();
  l5_cmd->callback([&] {
    action = [&] {
      Formula f = parse(text);
      std::vector<Formula> ps;
      for (const auto& p : premises) ps.push_back(parse(p));
      DecisionOutcome d = l5_valid(make_logic(logic_name, axioms), ps, f, g.max_size.value_or(5));
      print_outcome(g, d, f);
      return exit_for(d.verdict);
    };
  });

  // strong-eq
  std::string text2;
  auto* se_cmd = app.add_subcommand("strong-eq", "Decide strong equivalence (|-HT phi <-> psi)");
  se_cmd->add_option("phi", text, "First formula")->required();
  se_cmd->add_option("psi", text2, "Second formula")->required();
  se_cmd->callback([&] {
    action = [&] {
      Formula a = parse(text), b = parse(text2);
      DecisionOutcome d = strong_equiv_ht(a, b);
      Formula ident = Formula::ident(a, b);
      if (g.json) {
        Json j = to_json(d, Formula::iff(a, b));
        j["strongly_equivalent"] = d.verdict == Verdict::Valid;
        j["identity"] = render(ident);
        print_json(j);
      } else {
        std::cout << (d.verdict == Verdict::Valid ? "strongly equivalent" : "not strongly equivalent") << "\n";
        std::cout << "reading: " << render(ident) << (d.verdict == Verdict::Valid ? " holds" : " fails")
                  << " in L5(HT)\n";
        if (d.witness) print_witness_text(*d.witness);
      }
      return exit_for(d.verdict);
    };
  });

  // dual
  std::string model_path, frame_path, assign_path;
  std::optional<std::size_t> world;
  std::size_t depth = 2, modal_depth = 1;
  auto* dual_cmd = app.add_subcommand("dual", "Translate between L5-models and L5-frames");
  dual_cmd->require_subcommand(1);
  auto* to_frame = dual_cmd->add_subcommand("to-frame", "Prime-filter frame of a model");
  to_frame->add_option("--model", model_path, "Model JSON")->required();
  to_frame->add_option("--assign", assign_path, "Assignment JSON")->required();
  to_frame->callback([&] {
    action = [&] {
      L5Model m = model_from_json(read_json(model_path));
      AlgebraAssignment gamma = algebra_assignment_from_json(m.algebra(), read_json(assign_path));
      PrimeFilterFrame p = algebra_to_frame(m, gamma, keys(gamma));
      print_json(to_json(p, m));
      return kTrue;
    };
  });
  auto* to_alg = dual_cmd->add_subcommand("to-algebra", "Truth-set model of a frame");
  to_alg->add_option("--frame", frame_path, "Frame JSON")->required();
  to_alg->add_option("--assign", assign_path, "Assignment JSON")->required();
  to_alg->add_option("--world", world, "Designated maximal world (default: least maximal)");
  to_alg->callback([&] {
    action = [&] {
      KripkeFrame fr = frame_from_json(read_json(frame_path));
      FrameAssignment ga = frame_assignment_from_json(fr, read_json(assign_path));
      World w = world ? static_cast<World>(*world) : default_top_world(fr);
      TruthSetModel t = frame_to_algebra(fr, ga, w, keys(ga));
      print_json(to_json(t, fr, w));
      return kTrue;
    };
  });
  auto* rt = dual_cmd->add_subcommand("round-trip", "Compare satisfaction across both translations");
  rt->add_option("--model", model_path, "Model JSON (model -> frame -> model -> frame)");
  rt->add_option("--frame", frame_path, "Frame JSON (frame -> model -> frame)");
  rt->add_option("--assign", assign_path, "Assignment JSON")->required();
  rt->add_option("--world", world, "Designated maximal world for --frame");
  rt->add_option("--depth", depth, "Sample: all formulas up to this depth (default 2)");
  rt->add_option("--modal-depth", modal_depth, "Sample: box nesting limit (default 1)");
  rt->callback([&] {
    action = [&] {
      if (model_path.empty() == frame_path.empty()) throw InvalidStructure("give exactly one of --model and --frame");
      RoundTripReport r;
      std::vector<Var> vars;
      auto sample = [&](const std::vector<Var>& vs) {
        std::vector<std::string> names;
        for (Var v : vs) names.push_back(v.name());
        return enumerate_formulas({atoms_with_bot(names), depth, modal_depth});
      };
      if (!model_path.empty()) {
        L5Model m = model_from_json(read_json(model_path));
        AlgebraAssignment gamma = algebra_assignment_from_json(m.algebra(), read_json(assign_path));
        vars = keys(gamma);
        r = round_trip_check(m, gamma, vars, sample(vars));
      } else {
        KripkeFrame fr = frame_from_json(read_json(frame_path));
        FrameAssignment ga = frame_assignment_from_json(fr, read_json(assign_path));
        vars = keys(ga);
        r = round_trip_check(fr, ga, world ? static_cast<World>(*world) : default_top_world(fr), vars, sample(vars));
      }
      if (g.json) {
        Json ds = Json::array();
        for (const auto& d : r.discrepancies)
          ds.push_back({{"formula", render(d.formula)}, {"stage", d.stage}, {"expected", d.expected}, {"found", d.found}});
        print_json({{"checked", r.checked}, {"discrepancies", ds}});
      } else {
        std::cout << r.checked << " formulas checked, " << r.discrepancies.size() << " discrepancies\n";
        for (const auto& d : r.discrepancies)
          std::cout << "  " << render(d.formula) << " at " << d.stage << ": expected " << d.expected << ", found "
                    << d.found << "\n";
      }
      return r.ok() ? kTrue : kFalse;
    };
  });

  // enumerate
  bool dp_only = false;
  std::string frame_class = "any";
  auto* en_cmd = app.add_subcommand("enumerate", "List structures up to isomorphism");
  en_cmd->require_subcommand(1);
  auto* en_alg = en_cmd->add_subcommand("algebras", "Heyting algebras with 2..max-size elements");
  en_alg->add_flag("--dp", dp_only, "Only algebras with the disjunction property");
  en_alg->callback([&] {
    action = [&] {
      auto hs = enumerate_heyting(g.max_size.value_or(5), dp_only);
      if (g.json) {
        Json a = Json::array();
        for (const auto& h : hs) a.push_back(to_json(h));
        print_json(a);
      } else {
        for (const auto& h : hs) {
          std::cout << h.size() << " elements" << (has_dp(h) ? ", DP" : "") << (is_linear(h) ? ", linear" : "")
                    << (is_kc_algebra(h) ? ", KC" : "") << "; order";
          for (Element a = 0; a < h.size(); ++a)
            for (Element b = 0; b < h.size(); ++b)
              if (a != b && h.leq(a, b)) {
                bool cover = true;
                for (Element c = 0; c < h.size(); ++c)
                  if (c != a && c != b && h.leq(a, c) && h.leq(c, b)) cover = false;
                if (cover) std::cout << " " << a << "<" << b;
              }
          std::cout << "\n";
        }
        std::cout << hs.size() << " algebra(s)\n";
      }
      return kTrue;
    };
  });
  auto* en_fr = en_cmd->add_subcommand("frames", "Rooted frames with 1..max-size worlds");
  en_fr->add_option("--class", frame_class, "any, linear, single-maximal or at-most-two")
      ->check(CLI::IsMember({"any", "linear", "single-maximal", "at-most-two"}));
  en_fr->callback([&] {
    action = [&] {
      FrameClass c = frame_class == "linear"           ? FrameClass::Linear
                     : frame_class == "single-maximal" ? FrameClass::SingleMaximal
                     : frame_class == "at-most-two"    ? FrameClass::AtMostTwo
                                                       : FrameClass::Any;
      auto fs = enumerate_frames(g.max_size.value_or(6), c);
      if (g.json) {
        Json a = Json::array();
        for (const auto& f : fs) a.push_back(to_json(f));
        print_json(a);
      } else {
        for (const auto& f : fs) std::cout << frame_text(f) << "\n";
        std::cout << fs.size() << " frame(s)\n";
      }
      return kTrue;
    };
  });

  // check-proof
  std::string file;
  auto* cp_cmd = app.add_subcommand("check-proof", "Check a derivation file");
  cp_cmd->add_option("file", file, "Derivation JSON")->required();
  cp_cmd->callback([&] {
    action = [&] {
      Derivation d = derivation_from_json(read_json(file));
      DerivationResult r = check_derivation(d);
      if (g.json) {
        print_json(to_json(r, d));
      } else {
        for (std::size_t i = 0; i < r.lines.size(); ++i) {
          std::cout << (i + 1) << ". " << render(d.lines[i].formula) << "  [" << justification_name(d.lines[i].just)
                    << "]  " << failure_name(r.lines[i].failure);
          if (!r.lines[i].reason.empty()) std::cout << ": " << r.lines[i].reason;
          std::cout << "\n";
        }
        Verdict v = r.verdict();
        std::cout << (v == Verdict::Valid ? "accepted" : v == Verdict::Invalid ? "rejected" : "undetermined");
        if (r.conclusion && v == Verdict::Valid) std::cout << ", conclusion " << render(*r.conclusion);
        std::cout << "\n";
      }
      return exit_for(r.verdict());
    };
  });

  // check-frame
  auto* cf_cmd = app.add_subcommand("check-frame", "Validate a frame or a frame countermodel");
  cf_cmd->add_option("file", file, "Frame or witness JSON")->required();
  cf_cmd->add_option("--assign", assign_path, "Assignment JSON to validate against the frame");
  cf_cmd->callback([&] {
    action = [&] {
      Json j = read_json(file);
      const bool witness = j.contains("kind");
      const Json& fj = witness ? j.at("frame") : j;
      FrameReport rep = check_frame(raw_frame_from_json(fj));
      Json out = report_json(rep.report);
      std::vector<std::string> problems;
      if (rep.valid()) {
        KripkeFrame fr = frame_from_json(fj);
        out["bottom"] = fr.bottom();
        out["maximal"] = members(fr.maximal());
        std::optional<FrameAssignment> ga;
        try {
          if (witness) ga = frame_assignment_from_json(fr, j.at("assignment"));
          else if (!assign_path.empty()) ga = frame_assignment_from_json(fr, read_json(assign_path));
        } catch (const InvalidStructure& e) {
          problems.push_back(e.what());
        }
        if (witness && ga) {
          Formula f = parse(j.at("formula").get<std::string>());
          World w = j.at("world").get<World>();
          if (w >= fr.size() || sat(fr, *ga, w, f)) problems.push_back("formula holds at the claimed world");
        }
      }
      const bool ok = rep.valid() && problems.empty();
      out["valid"] = ok;
      if (!problems.empty()) out["problems"] = problems;
      if (g.json) {
        print_json(out);
      } else {
        print_report(rep.report);
        for (const auto& p : problems) std::cout << "problem: " << p << "\n";
        std::cout << (ok ? (witness ? "valid countermodel" : "valid frame") : "invalid") << "\n";
      }
      return ok ? kTrue : kFalse;
    };
  });

  // check-algebra
  auto* ca_cmd = app.add_subcommand("check-algebra", "Validate an algebra, model or algebra countermodel");
  ca_cmd->add_option("file", file, "Algebra, model or witness JSON")->required();
  ca_cmd->callback([&] {
    action = [&] {
      Json j = read_json(file);
      const bool witness = j.contains("kind");
      const Json& aj = witness ? j.at("algebra") : j;
      RawTables raw = raw_tables_from_json(aj);
      ValidationReport rep = check_heyting(raw);
      Json out = report_json(rep);
      std::vector<std::string> problems;
      if (rep.valid()) {
        HeytingAlgebra h = HeytingAlgebra::from_raw(raw);
        out["dp"] = has_dp(h);
        std::optional<L5Model> m;
        if (aj.contains("ultrafilter")) {
          try {
            m = model_from_json(aj);
            out["truth_conditions"] = m->truth_conditions();
          } catch (const InvalidStructure& e) {
            problems.push_back(e.what());
          }
        }
        if (witness && problems.empty()) {
          Formula f = parse(j.at("formula").get<std::string>());
          AlgebraAssignment gamma = algebra_assignment_from_json(h, j.at("assignment"));
          if (m ? satisfies(*m, gamma, f) : eval(h, gamma, f) == h.top())
            problems.push_back("formula is not falsified by the assignment");
        }
      }
      const bool ok = rep.valid() && problems.empty();
      out["valid"] = ok;
      if (!problems.empty()) out["problems"] = problems;
      if (g.json) {
        print_json(out);
      } else {
        print_report(rep);
        for (const auto& p : problems) std::cout << "problem: " << p << "\n";
        std::cout << (ok ? (witness ? "valid countermodel" : "valid") : "invalid") << "\n";
      }
      return ok ? kTrue : kFalse;
    };
  });

  // eval
  auto* ev_cmd = app.add_subcommand("eval", "Evaluate a formula in a model or on a frame");
  ev_cmd->add_option("formula", text, "Formula")->required();
  ev_cmd->add_option("--model", model_path, "Model JSON");
  ev_cmd->add_option("--frame", frame_path, "Frame JSON");
  ev_cmd->add_option("--assign", assign_path, "Assignment JSON")->required();
  ev_cmd->add_option("--world", world, "World to report (frames; default: all worlds)");
  ev_cmd->callback([&] {
    action = [&] {
      if (model_path.empty() == frame_path.empty()) throw InvalidStructure("give exactly one of --model and --frame");
      Formula f = parse(text);
      if (!model_path.empty()) {
        L5Model m = model_from_json(read_json(model_path));
        AlgebraAssignment gamma = algebra_assignment_from_json(m.algebra(), read_json(assign_path));
        Element v = eval(m, gamma, f);
        const bool holds = m.designated(v);
        if (g.json) {
          Json j = {{"formula", render(f)}, {"value", v}, {"satisfied", holds}};
          if (g.trace) {
            Json t = Json::array();
            for (const auto& [sub, e] : eval_trace(m, gamma, f)) t.push_back({{"formula", render(sub)}, {"value", e}});
            j["trace"] = t;
          }
          print_json(j);
        } else {
          if (g.trace)
            for (const auto& [sub, e] : eval_trace(m, gamma, f))
              std::cout << "  " << render(sub) << " = " << e << (m.designated(e) ? " (in TRUE)" : "") << "\n";
          std::cout << "value " << v << ", " << (holds ? "satisfied" : "not satisfied") << "\n";
        }
        return holds ? kTrue : kFalse;
      }
      KripkeFrame fr = frame_from_json(read_json(frame_path));
      FrameAssignment ga = frame_assignment_from_json(fr, read_json(assign_path));
      if (world && *world >= fr.size()) throw InvalidStructure("no world " + std::to_string(*world));
      WorldSet t = truth_set(fr, ga, f);
      const bool holds = world ? has(t, *world) : t == fr.worlds();
      std::vector<Formula> subs;
      if (g.trace) subformulas(f, subs);
      if (g.json) {
        Json j = {{"formula", render(f)}, {"truth_set", members(t)}, {"holds", holds}};
        if (g.trace) {
          Json tr = Json::array();
          for (const auto& s : subs) tr.push_back({{"formula", render(s)}, {"truth_set", members(truth_set(fr, ga, s))}});
          j["trace"] = tr;
        }
        print_json(j);
      } else {
        if (g.trace)
          for (const auto& s : subs) std::cout << "  " << render(s) << " at " << set_text(truth_set(fr, ga, s)) << "\n";
        std::cout << "true at " << set_text(t) << (holds ? ", holds" : ", fails") << "\n";
      }
      return holds ? kTrue : kFalse;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
