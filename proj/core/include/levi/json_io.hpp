#pragma once

#include <json.hpp>

#include "levi/oracle.hpp"

namespace levi {

// JSON encodings (all deterministic: nlohmann::json keeps keys sorted):
//   field         {"type":"gf","p":5} | {"type":"rational"}
//   scalar        integer residue for GF(p); string "a" / "-a/b" for rationals
//   monoid        {"size":N,"identity":e,"table":[[...],...]}   (0-based elements)
//   function      {"values":[...]}
//   problem spec  {"monoid":...,"field":...,"partition":[[1,2],[3,4]],
//                  "b":[...],"mu":[[...],...]}                  (1-based term indices)
//   tuple         {"f":[...],"g":[...],"h":[...],"hs":[[...],...]}
//   classification {"family":<tag>, ...params...}               (q, k 1-based)

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

Json monoid_to_json(const Monoid& m);
MonoidPtr monoid_from_json(const Json& j);

Json func_to_json(const Func& f);                      // {"values":[...]}
Func func_from_json(const MonoidPtr& m, const Field& f, const Json& j);

Json values_to_json(const Func& f);                    // bare value array
Func values_from_json(const MonoidPtr& m, const Field& f, const Json& j);

Json spec_to_json(const ProblemSpec& spec);
ProblemSpec spec_from_json(const Json& j);

Json tuple_to_json(const SolutionTuple& t);
SolutionTuple tuple_from_json(const ProblemSpec& spec, const Json& j);

Json classification_to_json(const Classification& cls);
Classification classification_from_json(const ProblemSpec& spec, const Json& j);

Json report_to_json(const OracleReport& report);

/// Human-readable report; a clean run contains the line
/// "COMPLETE: all oracle solutions covered by Theorem families".
std::string report_to_text(const OracleReport& report);

}  // namespace levi
