#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oblivion/postulates.hpp"
#include "oblivion/serialize.hpp"

namespace oblivion {

enum class SuiteMode { Exhaustive, Random };

struct SuiteOptions {
  SuiteMode mode = SuiteMode::Exhaustive;
  std::size_t atoms = 3;
  std::uint64_t count = 0;  // random instances
  std::uint64_t seed = 0;
  std::int64_t max_rank = 5;  // random OCF ranks are drawn from [0, max_rank]
};

struct PostulateTally {
  std::string id;
  std::uint64_t checked = 0;
  std::uint64_t violated = 0;
  std::uint64_t vacuous = 0;
};

struct SuiteReport {
  std::string suite;
  std::string operator_name;
  SuiteOptions options;
  std::uint64_t instances = 0;
  std::vector<PostulateTally> tallies;
  // First few violated reports, in discovery order.
  std::vector<PostulateReport> witnesses;

  std::uint64_t violations() const;
  // Verdicts from exhaustive runs quantify over every instance; random runs
  // are sampling-based.
  std::string basis() const { return options.mode == SuiteMode::Exhaustive ? "exhaustive" : "sampled"; }
};

Json to_json(const SuiteReport& report);

// Exhaustive runs are capped: 3 atoms for dfp, dfpes-sig, ocf-props and
// bridge; 2 atoms for dfpes-formula (its instance space is
// |states|² · |formula classes|²). CapExceededError beyond.

// DFP-1..7 for Delgrande's F over knowledge bases.
SuiteReport run_dfp_suite(const SuiteOptions& options);
// DFPes-1..6 plus the most-specific comparison against marginalisation.
SuiteReport run_dfpes_signature_suite(const SignatureForgetOperator& op, const SuiteOptions& options);
// DFPes-L-1..6 over consistent states and formula classes.
SuiteReport run_dfpes_formula_suite(const FormulaForgetOperator& op, const SuiteOptions& options);
// Belief preservation under marginalisation and lifting, marginal
// composition, and lift-then-marginalise recovery.
SuiteReport run_ocf_property_suite(const SuiteOptions& options);
// Delgrande forgetting vs marginalisation beliefs vs Boole elimination.
SuiteReport run_bridge_suite(const SuiteOptions& options);

}  // namespace oblivion
