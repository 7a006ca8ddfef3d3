#pragma once

#include "staudt/deform.hpp"
#include "staudt/geometrize.hpp"

// vendored nlohmann/json at vendor/json.hpp
#include <json.hpp>

namespace staudt {

using json = nlohmann::json;

json to_json(const RingPtr& r);
RingPtr ring_from_json(const json& j);

json to_json(const Arrangement& a);
json to_json(const BasedArrangement& a);
json to_json(const MarkedArrangement& a);
json to_json(const FunctionalArrangement& fa);
FunctionalArrangement functional_from_json(const json& j);

json to_json(const Realization& r);
Realization realization_from_json(const json& j);

json to_json(const LabelledGraph& g);
LabelledGraph graph_from_json(const json& j);

json to_json(const Word& w);
json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
json to_json(const MalcevPresentation& p);

json to_json(const ProjMat& m);
ProjMat projmat_from_json(const json& j);
json to_json(const Representation& rep);
Representation representation_from_json(const json& j);

json to_json(const std::vector<RelationReport>& reports);
json to_json(const CohomologyDims& dims);

} // namespace staudt
