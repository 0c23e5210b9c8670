#pragma once

#include <json.hpp>

#include "betapath/beta.hpp"
#include "betapath/generators.hpp"
#include "betapath/hypergraph.hpp"
#include "betapath/pathsearch.hpp"
#include "betapath/properties.hpp"
#include "betapath/skeleton.hpp"

// JSON formats shared by the CLI, the Python module and the test fixtures.
// Serialization is deterministic: objects have sorted keys and sets are
// emitted in order.
namespace betapath {

using Json = nlohmann::json;

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

// Sequences serialize as {"kind": "path"|"cycle", "items": ["v:a","e:0",...]};
// parsing resolves "e:" references by index or name against h.
Json to_json(const BetaSequence& s);
BetaSequence beta_sequence_from_json(const Hypergraph& h, const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const DualCorrespondence& corr);
Json to_json(const Isomorphism& iso);
Json to_json(const CycleEnumeration& enumeration);

Json to_json(const PeelResult<Vertex>& result);
Json to_json(const PeelResult<int>& result);

Json to_json(const GeneratorSet& t);
GeneratorSet generator_set_from_json(const Hypergraph& h, const Json& j);
Json to_json(const SkeletonGraph& g);
Json to_json(const WitnessExtraction& extraction);

Json to_json(const Labeling& phi);
Labeling labeling_from_json(const Json& j);

Json to_json(const LoosePath& p);
Json to_json(const AdversarialResult& result);

FamilySpec family_spec_from_json(const Json& j);

}  // namespace betapath
