#pragma once

#include <json.hpp>

#include "vsl/coeff.hpp"
#include "vsl/harmonics.hpp"
#include "vsl/relations.hpp"
#include "vsl/schroeder.hpp"
#include "vsl/symfunc.hpp"

namespace vsl {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "vsl/1";

Json to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const Json& j);

Json to_json(const RelationInstance& inst);
Json to_json(const RelationReport& r, bool witnesses = true);

Json to_json(const SurveyReport& r);

}  // namespace vsl
