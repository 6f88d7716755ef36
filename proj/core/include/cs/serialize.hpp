#pragma once

#include "json.hpp"

#include "cs/model.hpp"
#include "cs/proofgraph.hpp"

namespace cs {

using Json = nlohmann::ordered_json;

Json to_json(const Sequent& s);
Sequent sequent_from_json(const Json& j);

Json to_json(const RuleInstance& inst);
RuleInstance rule_instance_from_json(const Json& j);

Json to_json(const ProofGraph& g);
ProofGraph proof_graph_from_json(const Json& j);

Json to_json(const CarlsonModel& m);
CarlsonModel model_from_json(const Json& j);

}  // namespace cs
