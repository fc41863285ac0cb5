#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oblivion/postulates.hpp"
#include "oblivion/serialize.hpp"
#include "oblivion/signature.hpp"

namespace oblivion {

// Exhaustive census of belief-level formula-forgetting operators over a tiny
// signature.
//
// An operator is a total function (consistent state, formula class) ->
// consistent state, where states are the non-empty subsets of Ω_Σ and
// formula classes are all subsets of Ω_Σ (formulas up to equivalence,
// ⊥ and ⊤ included). Each operator is tested against DFPes-L-1..6 quantified
// over every state pair and formula-class pair.
//
// Up to one atom the operator space is enumerated outright (3^12 = 531441
// tables at |Σ| = 1). At two atoms the space has 15^240 members, so survivors
// are found by a complete backtracking search that prunes a partial table as
// soon as a fully determined postulate instance fails.
struct CensusOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct CensusSurvivor {
  // outputs[state][formula_class] is an index into the state list.
  std::vector<std::vector<std::uint32_t>> outputs;
  bool constant_top = false;
  // Re-checked with the generic DFPes-L checker over every instance.
  bool verified = false;
  std::string description;
};

struct CensusReport {
  Signature signature;
  std::vector<std::uint32_t> state_masks;  // world-code bitmasks, index order
  std::uint32_t formula_classes = 0;
  std::string operator_space;              // "531441" or "15^240"
  std::string method;                      // "enumeration" or "backtracking"
  std::uint64_t operators_enumerated = 0;  // enumeration only
  std::uint64_t search_nodes = 0;          // backtracking only
  // Enumeration only: rejected operators keyed by the first failed
  // postulate in check order L-1, L-6, L-2, L-3, L-4, L-5.
  std::array<std::uint64_t, 6> first_violation{};
  std::vector<CensusSurvivor> survivors;
};

// Throws CapExceededError for more than 2 atoms.
CensusReport triviality_census(const Signature& signature, const CensusOptions& options = {});

// Same as triviality_census but always uses backtracking; used to cross-check
// the enumeration at |Σ| ≤ 1.
CensusReport triviality_census_search(const Signature& signature);

// Wraps a census table as an operator. Applying it to an inconsistent state
// throws Error.
FormulaForgetOperator census_operator(const CensusReport& report,
                                      const std::vector<std::vector<std::uint32_t>>& outputs,
                                      std::string name);

// First DFPes-L postulate (1..6) the table violates, 0 if none. Uses the same
// bitmask encoding as the census.
int census_first_violation(const CensusReport& report,
                           const std::vector<std::vector<std::uint32_t>>& outputs);

Json to_json(const CensusReport& report);

}  // namespace oblivion
