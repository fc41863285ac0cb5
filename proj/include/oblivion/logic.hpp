#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oblivion/formula.hpp"
#include "oblivion/signature.hpp"

namespace oblivion {

// Index of a world inside Ω_Σ; see world_bit() for the bit layout.
using WorldCode = std::uint32_t;

// One truth assignment over a signature.
class World {
 public:
  World(Signature signature, WorldCode code);

  const Signature& signature() const { return signature_; }
  WorldCode code() const { return code_; }
  bool value(std::size_t atom_index) const;
  // Throws UnknownAtomError.
  bool value(std::string_view atom) const;

  friend bool operator==(const World& a, const World& b) {
    return a.code_ == b.code_ && a.signature_ == b.signature_;
  }
  friend bool operator!=(const World& a, const World& b) { return !(a == b); }

 private:
  Signature signature_;
  WorldCode code_;
};

// Space separated literals in signature order, "-" marks a false atom:
// "-b -f p". The world over the empty signature renders as "".
std::string render_world(const World& w);
// Accepts the literals in any order; each atom of `signature` exactly once.
World parse_world(std::string_view text, const Signature& signature);

// A set of worlds over a signature. This is the extensional stand-in for a
// deductively closed belief set: the set of its models.
class BeliefState {
 public:
  explicit BeliefState(Signature signature);  // inconsistent (no worlds)
  BeliefState(Signature signature, std::vector<WorldCode> codes);
  BeliefState(Signature signature, std::span<const World> worlds);

  static BeliefState all_worlds(Signature signature);

  const Signature& signature() const { return signature_; }
  // Sorted, duplicate free.
  const std::vector<WorldCode>& codes() const { return codes_; }
  std::vector<World> worlds() const;

  std::size_t size() const { return codes_.size(); }
  bool consistent() const { return !codes_.empty(); }
  bool is_all_worlds() const { return codes_.size() == signature_.world_count(); }
  bool contains(WorldCode code) const;
  bool contains(const World& w) const;

  // Model-set inclusion, i.e. *this entails `other`. Signatures must match.
  bool is_subset_of(const BeliefState& other) const;

  friend bool operator==(const BeliefState& a, const BeliefState& b) {
    return a.signature_ == b.signature_ && a.codes_ == b.codes_;
  }
  friend bool operator!=(const BeliefState& a, const BeliefState& b) { return !(a == b); }

 private:
  Signature signature_;
  std::vector<WorldCode> codes_;
};

// Model-set union/intersection over a shared signature.
BeliefState united(const BeliefState& a, const BeliefState& b);
BeliefState intersected(const BeliefState& a, const BeliefState& b);

// Throws SignatureMismatchError unless both signatures are equal.
void require_same_signature(const Signature& a, const Signature& b, std::string_view what);

bool evaluate(const World& w, const Formula& f);
BeliefState models(const Formula& f, const Signature& signature);
// Intersection of the model sets; an empty list yields all worlds.
BeliefState models(std::span<const Formula> formulas, const Signature& signature);
bool entails(const BeliefState& bs, const Formula& f);
bool equivalent(const BeliefState& a, const BeliefState& b);

// Disjunction of world conjunctions in code order. Bottom for no worlds and
// Top for all worlds.
Formula canonical_formula(const BeliefState& bs);
// Conjunction of the literals of `w` in signature order (Top when empty).
Formula world_formula(const World& w);

// ω restricted to the atoms of `sub`; `sub` must be a subset of the
// world's signature.
World reduce_world(const World& w, const Signature& sub);
BeliefState reduce_worlds(const BeliefState& bs, const Signature& sub);
BeliefState expand_worlds(const BeliefState& bs, const Signature& super);

// ω ≡_P ω': agreement on every atom outside P.
bool elementary_equivalent(const World& w1, const World& w2, const Signature& except);

// Every belief state (subset of Ω_Σ) over a small signature, ordered by the
// bitmask of the member world codes. Refuses signatures with more than 4 atoms.
std::vector<BeliefState> all_belief_states(const Signature& signature, bool consistent_only);

}  // namespace oblivion
