#include "oblivion/ocf.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "oblivion/error.hpp"

namespace oblivion {

std::int64_t Rank::value() const {
  if (!value_) throw Error("infinite rank has no finite value");
  return *value_;
}

std::string Rank::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Rank min(const Rank& a, const Rank& b) { return b < a ? b : a; }

Ocf::Ocf(Signature signature, std::vector<std::int64_t> ranks)
    : signature_(std::move(signature)), ranks_(std::move(ranks)) {
  if (ranks_.size() != signature_.world_count()) {
    throw OcfError(OcfError::Kind::MissingWorld,
                   "ranking over " + signature_.to_string() + " needs " +
                       std::to_string(signature_.world_count()) + " worlds, got " +
                       std::to_string(ranks_.size()));
  }
  for (WorldCode c = 0; c < ranks_.size(); ++c) {
    if (ranks_[c] < 0) {
      throw OcfError(OcfError::Kind::NegativeRank,
                     "negative rank " + std::to_string(ranks_[c]) + " for world '" +
                         render_world(World(signature_, c)) + "'");
    }
  }
  const auto lowest = *std::min_element(ranks_.begin(), ranks_.end());
  if (lowest != 0) {
    throw OcfError(OcfError::Kind::Unnormalized,
                   "ranking is not normalized: minimum rank is " + std::to_string(lowest));
  }
}

Ocf Ocf::uniform(Signature signature) {
  const auto n = signature.world_count();
  return Ocf(std::move(signature), std::vector<std::int64_t>(n, 0));
}

std::int64_t Ocf::rank(const World& w) const {
  require_same_signature(w.signature(), signature_, "rank lookup");
  return ranks_[w.code()];
}

Ocf make_ocf(const Signature& signature,
             const std::vector<std::pair<World, std::int64_t>>& assignments) {
  std::vector<std::optional<std::int64_t>> seen(signature.world_count());
  for (const auto& [world, rank] : assignments) {
    require_same_signature(world.signature(), signature, "OCF assignment");
    if (seen[world.code()]) {
      throw OcfError(OcfError::Kind::DuplicateWorld,
                     "world '" + render_world(world) + "' is ranked twice");
    }
    seen[world.code()] = rank;
  }
  std::vector<std::int64_t> ranks;
  ranks.reserve(seen.size());
  for (WorldCode c = 0; c < seen.size(); ++c) {
    if (!seen[c]) {
      throw OcfError(OcfError::Kind::MissingWorld,
                     "world '" + render_world(World(signature, c)) + "' has no rank");
    }
    ranks.push_back(*seen[c]);
  }
  return Ocf(signature, std::move(ranks));
}

Rank rank_of(const Ocf& k, const Formula& f) {
  const BeliefState m = models(f, k.signature());
  Rank out = Rank::infinite();
  for (WorldCode c : m.codes()) out = min(out, Rank::finite(k.rank(c)));
  return out;
}

BeliefState beliefs(const Ocf& k) {
  std::vector<WorldCode> codes;
  for (WorldCode c = 0; c < k.ranks().size(); ++c) {
    if (k.rank(c) == 0) codes.push_back(c);
  }
  return BeliefState(k.signature(), std::move(codes));
}

bool believes(const Ocf& k, const Formula& f) { return entails(beliefs(k), f); }

Ocf marginalise(const Ocf& k, const Signature& sub) {
  if (!sub.is_subset_of(k.signature())) {
    throw SignatureError("marginalisation: " + sub.to_string() + " is not a subset of " +
                         k.signature().to_string());
  }
  std::vector<std::int64_t> ranks(sub.world_count(), std::numeric_limits<std::int64_t>::max());
  for (WorldCode c = 0; c < k.ranks().size(); ++c) {
    const WorldCode target = reduce_world(World(k.signature(), c), sub).code();
    ranks[target] = std::min(ranks[target], k.rank(c));
  }
  return Ocf(sub, std::move(ranks));
}

Ocf lift(const Ocf& k, const Signature& super) {
  if (!k.signature().is_subset_of(super)) {
    throw SignatureError("lifting: " + k.signature().to_string() + " is not a subset of " +
                         super.to_string());
  }
  std::vector<std::int64_t> ranks(super.world_count());
  for (WorldCode c = 0; c < ranks.size(); ++c) {
    ranks[c] = k.rank(reduce_world(World(super, c), k.signature()).code());
  }
  return Ocf(super, std::move(ranks));
}

Ocf ocf_from_beliefs(const BeliefState& bs) {
  if (!bs.consistent()) {
    throw InconsistentBeliefsError("cannot build an OCF whose beliefs are inconsistent");
  }
  std::vector<std::int64_t> ranks(bs.signature().world_count(), 1);
  for (WorldCode c : bs.codes()) ranks[c] = 0;
  return Ocf(bs.signature(), std::move(ranks));
}

std::vector<WorldCode> worlds_by_rank(const Ocf& k) {
  std::vector<WorldCode> order(k.ranks().size());
  std::iota(order.begin(), order.end(), WorldCode{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](WorldCode a, WorldCode b) { return k.rank(a) < k.rank(b); });
  return order;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Ocf parse_ocf(std::string_view text) {
  std::optional<Signature> signature;
  std::vector<std::pair<World, std::int64_t>> assignments;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    try {
      if (line.substr(0, 4) == "sig:") {
        if (signature) throw ParseError("duplicate 'sig:' header", line_no, 1);
        signature = parse_atom_list(line.substr(4));
        continue;
      }
      if (!signature) throw ParseError("expected 'sig:' header before world lines", line_no, 1);
      const auto colon = line.rfind(':');
      if (colon == std::string_view::npos) throw ParseError("expected '<world> : <rank>'", line_no, 1);
      const std::string rank_text(Trim(line.substr(colon + 1)));
      std::size_t used = 0;
      std::int64_t rank = 0;
      try {
        rank = std::stoll(rank_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (rank_text.empty() || used != rank_text.size()) {
        const auto offset = static_cast<std::size_t>(line.data() - raw.data());
        throw ParseError("invalid rank '" + rank_text + "'", line_no, colon + 2 + offset);
      }
      assignments.emplace_back(parse_world(Trim(line.substr(0, colon)), *signature), rank);
    } catch (const ParseError&) {
      throw;
    } catch (const OcfError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (!signature) throw ParseError("missing 'sig:' header", 0, 1);
  return make_ocf(*signature, assignments);
}

Ocf read_ocf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open OCF file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ocf(buf.str());
}

std::string render_ocf(const Ocf& k) {
  std::string out = "sig:";
  for (const auto& atom : k.signature().atoms()) out += " " + atom;
  out += '\n';
  for (WorldCode c : worlds_by_rank(k)) {
    out += render_world(World(k.signature(), c)) + " : " + std::to_string(k.rank(c)) + '\n';
  }
  return out;
}

}  // namespace oblivion
