#include "oblivion/random.hpp"

#include <algorithm>

namespace oblivion {

Formula random_formula(Rng& rng, const Signature& signature, std::size_t max_depth) {
  const std::uint64_t leaf_kinds = signature.size() + 2;
  auto leaf = [&]() -> Formula {
    const auto pick = rng.below(signature.empty() ? 2 : leaf_kinds + signature.size());
    if (signature.empty() || pick == 0) return rng.coin() ? Formula::Top() : Formula::Bottom();
    return Formula::Atom(signature[pick % signature.size()]);
  };
  if (max_depth == 0 || rng.below(4) == 0) return leaf();
  switch (rng.below(5)) {
    case 0:
      return Formula::Not(random_formula(rng, signature, max_depth - 1));
    case 1:
      return Formula::And(random_formula(rng, signature, max_depth - 1),
                          random_formula(rng, signature, max_depth - 1));
    case 2:
      return Formula::Or(random_formula(rng, signature, max_depth - 1),
                         random_formula(rng, signature, max_depth - 1));
    case 3:
      return Formula::Implies(random_formula(rng, signature, max_depth - 1),
                              random_formula(rng, signature, max_depth - 1));
    default:
      return Formula::Iff(random_formula(rng, signature, max_depth - 1),
                          random_formula(rng, signature, max_depth - 1));
  }
}

BeliefState random_belief_state(Rng& rng, const Signature& signature, bool consistent) {
  for (;;) {
    std::vector<WorldCode> codes;
    for (WorldCode c = 0; c < signature.world_count(); ++c) {
      if (rng.coin()) codes.push_back(c);
    }
    if (!consistent || !codes.empty()) return BeliefState(signature, std::move(codes));
  }
}

Signature random_subsignature(Rng& rng, const Signature& signature) {
  std::vector<std::string> atoms;
  for (const auto& atom : signature.atoms()) {
    if (rng.coin()) atoms.push_back(atom);
  }
  return Signature(std::move(atoms));
}

Ocf random_ocf(Rng& rng, const Signature& signature, std::int64_t max_rank) {
  std::vector<std::int64_t> ranks(signature.world_count());
  for (auto& r : ranks) r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_rank) + 1));
  const auto lowest = *std::min_element(ranks.begin(), ranks.end());
  for (auto& r : ranks) r -= lowest;
  return Ocf(signature, std::move(ranks));
}

}  // namespace oblivion
