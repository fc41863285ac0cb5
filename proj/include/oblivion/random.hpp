#pragma once

#include <cstdint>
#include <random>

#include "oblivion/formula.hpp"
#include "oblivion/logic.hpp"
#include "oblivion/ocf.hpp"

namespace oblivion {

// Seeded generator for the randomized suites. Draws use plain modular
// reduction on std::mt19937_64, whose output sequence is fixed by the
// standard, so a seed yields the same instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() >> 11) & 1u; }

 private:
  std::mt19937_64 engine_;
};

// Random formula over the atoms of `signature` with nesting depth at most
// `max_depth`.
Formula random_formula(Rng& rng, const Signature& signature, std::size_t max_depth);

// Each world is included with probability 1/2; redrawn until consistent when
// `consistent` is set.
BeliefState random_belief_state(Rng& rng, const Signature& signature, bool consistent);

// Subset of `signature`, each atom with probability 1/2.
Signature random_subsignature(Rng& rng, const Signature& signature);

// Ranks drawn from [0, max_rank], then shifted so the minimum is 0.
Ocf random_ocf(Rng& rng, const Signature& signature, std::int64_t max_rank);

}  // namespace oblivion
