#pragma once

// JSON forms shared by the CLI and the exporters.
//
//   diagram          {"n": 2, "m": 2, "arcs": [[0, 3], [1, 2]]}
//   algebra element  {"n": .., "m": .., "terms": [{"coeff": c, "diagram": <diagram>}]}
//   complex          {"augmentation": "M4" | null, "truncated_at": k | null,
//                     "terms": [{"degree": k, "summands": [{"module": "P2", "tag": [<diagram>...]}]}],
//                     "differentials": [{"degree": k, "entries": [{"from", "to", "coeff", "diagram"}]}]}
//
// Object keys come out sorted, so equal values serialize to equal bytes.

#include "json.hpp"

#include "chebtl/algebra.hpp"
#include "chebtl/diagram.hpp"
#include "chebtl/homology.hpp"
#include "chebtl/presentation.hpp"

namespace chebtl {

using Json = nlohmann::json;

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json to_json(const AlgebraElement& a);
Json to_json(const ComplexSpec& c);
Json to_json(const ExactnessReport& r);
Json to_json(const RelationReport& r);
Json to_json(const QuadraticReport& r);

}  // namespace chebtl
