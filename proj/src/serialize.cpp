#include "oblivion/serialize.hpp"

#include "oblivion/error.hpp"

namespace oblivion {

namespace {

// Rethrows JSON shape errors as library errors.
template <typename Fn>
auto Decode(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json to_json(const Signature& s) {
  Json out = Json::array();
  for (const auto& atom : s.atoms()) out.push_back(atom);
  return out;
}

Signature signature_from_json(const Json& j) {
  return Signature(Decode("signature", [&] { return j.get<std::vector<std::string>>(); }));
}

std::vector<std::string> render_worlds(const BeliefState& bs) {
  std::vector<std::string> out;
  out.reserve(bs.size());
  for (const World& w : bs.worlds()) out.push_back(render_world(w));
  return out;
}

Json to_json(const BeliefState& bs) {
  Json out;
  out["signature"] = to_json(bs.signature());
  out["worlds"] = render_worlds(bs);
  return out;
}

BeliefState belief_state_from_json(const Json& j) {
  return Decode("belief state", [&] {
    const Signature sig = signature_from_json(j.at("signature"));
    std::vector<World> worlds;
    for (const auto& w : j.at("worlds")) worlds.push_back(parse_world(w.get<std::string>(), sig));
    return BeliefState(sig, worlds);
  });
}

Json to_json(const Ocf& k) {
  Json out;
  out["signature"] = to_json(k.signature());
  Json ranks = Json::array();
  for (WorldCode c : worlds_by_rank(k)) {
    Json entry;
    entry["world"] = render_world(World(k.signature(), c));
    entry["rank"] = k.rank(c);
    ranks.push_back(std::move(entry));
  }
  out["ranks"] = std::move(ranks);
  return out;
}

Ocf ocf_from_json(const Json& j) {
  return Decode("OCF", [&] {
    const Signature sig = signature_from_json(j.at("signature"));
    std::vector<std::pair<World, std::int64_t>> assignments;
    for (const auto& entry : j.at("ranks")) {
      assignments.emplace_back(parse_world(entry.at("world").get<std::string>(), sig),
                               entry.at("rank").get<std::int64_t>());
    }
    return make_ocf(sig, assignments);
  });
}

}  // namespace oblivion
