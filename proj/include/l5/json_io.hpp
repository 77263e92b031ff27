#pragma once

#include <json.hpp>

#include "l5/duality.hpp"
#include "l5/logics.hpp"
#include "l5/proofkit.hpp"

namespace l5 {

using Json = nlohmann::ordered_json;

// Algebras: {"size": n, "leq": [[bool]], "bot": i, "top": j}, optionally with
// "meet"/"join"/"impl" tables that are cross-checked. Models add "ultrafilter".
Json to_json(const HeytingAlgebra& h);
Json to_json(const L5Model& m);
/// Shape errors throw InvalidStructure; law violations are left to check_heyting.
RawTables raw_tables_from_json(const Json& j);
HeytingAlgebra algebra_from_json(const Json& j);
L5Model model_from_json(const Json& j);

// Frames: {"worlds": n, "order": [[i, j]]}; output lists cover pairs and adds
// "bottom" and "maximal" for readers.
Json to_json(const KripkeFrame& f);
RawFrame raw_frame_from_json(const Json& j);
KripkeFrame frame_from_json(const Json& j);

// Assignments: {"x": [worlds]} for frames, {"x": element} for algebras.
Json to_json(const FrameAssignment& g);
Json to_json(const AlgebraAssignment& gamma);
FrameAssignment frame_assignment_from_json(const KripkeFrame& f, const Json& j);
AlgebraAssignment algebra_assignment_from_json(const HeytingAlgebra& h, const Json& j);

/// {"kind": "frame"|"algebra", "formula": ..., ...home format..., "assignment": ...}
Json witness_to_json(const Witness& w, const Formula& falsified);
Json to_json(const DecisionOutcome& d, const Formula& f);

Json to_json(const PrimeFilterFrame& p, const L5Model& source);
Json to_json(const TruthSetModel& t, const KripkeFrame& source, World w_top);

Derivation derivation_from_json(const Json& j);
Json to_json(const Derivation& d);
Json to_json(const DerivationResult& r, const Derivation& d);

}  // namespace l5
