#pragma once

#include <json.hpp>

#include "oblivion/logic.hpp"
#include "oblivion/ocf.hpp"

namespace oblivion {

// Insertion-ordered so that reports serialize byte-identically across runs.
using Json = nlohmann::ordered_json;

// {"signature": ["b", "f", "p"], "worlds": ["-b -f -p", ...]}, worlds in code order.
Json to_json(const BeliefState& bs);
BeliefState belief_state_from_json(const Json& j);

// {"signature": [...], "ranks": [{"world": "-b -f -p", "rank": 0}, ...]},
// ordered by rank, then world.
Json to_json(const Ocf& k);
Ocf ocf_from_json(const Json& j);

Json to_json(const Signature& s);
Signature signature_from_json(const Json& j);

// Worlds of `bs` rendered in code order.
std::vector<std::string> render_worlds(const BeliefState& bs);

}  // namespace oblivion
