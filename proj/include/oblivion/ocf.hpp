#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oblivion/formula.hpp"
#include "oblivion/logic.hpp"
#include "oblivion/signature.hpp"

namespace oblivion {

// Rank of a formula: a non-negative integer, or infinite for a formula
// without models.
class Rank {
 public:
  static Rank finite(std::int64_t value) { return Rank(value); }
  static Rank infinite() { return Rank(); }

  bool is_infinite() const { return !value_.has_value(); }
  // Throws Error when infinite.
  std::int64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Rank&, const Rank&) = default;
  friend bool operator<(const Rank& a, const Rank& b) {
    if (a.is_infinite()) return false;
    return b.is_infinite() || *a.value_ < *b.value_;
  }

 private:
  Rank() = default;
  explicit Rank(std::int64_t value) : value_(value) {}

  std::optional<std::int64_t> value_;
};

Rank min(const Rank& a, const Rank& b);

// Ordinal conditional function: a total ranking of Ω_Σ with minimum rank 0.
class Ocf {
 public:
  // ranks[code] is the rank of the world with that code. Throws OcfError if
  // the vector does not cover Ω_Σ, a rank is negative, or no rank is 0.
  Ocf(Signature signature, std::vector<std::int64_t> ranks);

  // All worlds at rank 0.
  static Ocf uniform(Signature signature);

  const Signature& signature() const { return signature_; }
  const std::vector<std::int64_t>& ranks() const { return ranks_; }
  std::int64_t rank(WorldCode code) const { return ranks_[code]; }
  std::int64_t rank(const World& w) const;

  friend bool operator==(const Ocf& a, const Ocf& b) {
    return a.signature_ == b.signature_ && a.ranks_ == b.ranks_;
  }

 private:
  Signature signature_;
  std::vector<std::int64_t> ranks_;
};

// Builds an OCF from an explicit world/rank listing. Each world of Ω_Σ must
// occur exactly once.
Ocf make_ocf(const Signature& signature, const std::vector<std::pair<World, std::int64_t>>& assignments);

// κ(φ) = min rank over ⟦φ⟧; infinite when φ has no models.
Rank rank_of(const Ocf& k, const Formula& f);

// ⟦κ⟧: the rank-0 worlds. Bel(κ) is their theory.
BeliefState beliefs(const Ocf& k);
bool believes(const Ocf& k, const Formula& f);

// κ restricted to `sub`: each world of Ω_sub gets the minimum rank of its
// extensions. `sub` must be a subset of the signature.
Ocf marginalise(const Ocf& k, const Signature& sub);

// κ' lifted to `super`: each world gets the rank of its reduction to the
// signature of κ'.
Ocf lift(const Ocf& k, const Signature& super);

// Rank 0 on the worlds of `bs`, rank 1 elsewhere. Throws
// InconsistentBeliefsError on an empty model set.
Ocf ocf_from_beliefs(const BeliefState& bs);

// `.ocf` text: a "sig: p b f" header, then one "<world> : <rank>" line per
// world, '#' comments and blank lines ignored.
Ocf parse_ocf(std::string_view text);
Ocf read_ocf_file(const std::string& path);
// Canonical `.ocf` text: header, then worlds sorted by rank, then by code.
std::string render_ocf(const Ocf& k);

// World codes ordered by (rank, code).
std::vector<WorldCode> worlds_by_rank(const Ocf& k);

}  // namespace oblivion
