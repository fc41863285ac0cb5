#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oblivion/formula.hpp"
#include "oblivion/knowledge_base.hpp"
#include "oblivion/logic.hpp"
#include "oblivion/ocf.hpp"
#include "oblivion/serialize.hpp"

namespace oblivion {

enum class Status { Holds, Violated, NotApplicable };
std::string_view to_string(Status status);

// Outcome of checking one postulate on one instance (or on every instance
// derived from one set of inputs).
//
// A violated report carries a witness of the form
//   {"postulate": id, "operator": name, "inputs": {...}, "instance": {...}}
// where "inputs" is a complete argument set for the family's checker, so
// feeding it back through the matching replay_* function reproduces the
// violation. "instance" names the concrete sub-case and both sides' model sets.
struct PostulateReport {
  std::string id;
  Status status = Status::Holds;
  std::string note;
  Json witness;

  bool holds() const { return status == Status::Holds; }
  bool violated() const { return status == Status::Violated; }
};

Json to_json(const PostulateReport& report);

// ∘_f^Σ: maps an OCF over Σ and a signature P to an OCF over Σ \ P. The
// operator must accept P with atoms outside Σ (they are ignored).
struct SignatureForgetOperator {
  std::string name;
  std::function<Ocf(const Ocf&, const Signature&)> apply;
};

// ∘_f^L at the belief level: maps a belief state and a formula to a belief
// state over the same signature.
struct FormulaForgetOperator {
  std::string name;
  std::function<BeliefState(const BeliefState&, const Formula&)> apply;
};

SignatureForgetOperator marginalisation_operator();
// Forgets everything: the uniform OCF over Σ \ P.
SignatureForgetOperator belief_erasing_operator();

// Constant ⊤: returns every world of the input signature.
FormulaForgetOperator trivial_formula_operator();
FormulaForgetOperator identity_formula_operator();
// Full meet contraction: if the state entails a non-tautological φ, add all
// models of ¬φ; otherwise keep the state.
FormulaForgetOperator full_meet_contraction_operator();

// {{{ Delgrande's properties of F (DFP-1..7)

// DFP-3 is reported as holding by construction: belief states are model
// sets and hence deductively closed. Throws SignatureMismatchError when the
// two knowledge bases differ in signature.
std::vector<PostulateReport> check_dfp(const KnowledgeBase& kb, const KnowledgeBase& kb2,
                                       const Signature& p, const Signature& p2);
std::vector<PostulateReport> check_dfp(const BeliefState& gamma, const BeliefState& gamma2,
                                       const Signature& p, const Signature& p2);
std::vector<PostulateReport> replay_dfp(const Json& witness);

namespace dfp {
PostulateReport monotony(const BeliefState& gamma, const Signature& p);                     // DFP-1
PostulateReport entailment(const BeliefState& gamma, const BeliefState& gamma2,
                           const Signature& p);                                              // DFP-2
PostulateReport deductive_closure();                                                         // DFP-3
PostulateReport repeated(const BeliefState& gamma, const Signature& p);                      // DFP-4
PostulateReport intersection(const BeliefState& gamma, const Signature& p, const Signature& p2);  // DFP-5
PostulateReport iterated(const BeliefState& gamma, const Signature& p, const Signature& p2);      // DFP-6
PostulateReport original_language(const BeliefState& gamma, const Signature& p);             // DFP-7
}  // namespace dfp

// }}}

// {{{ Signature forgetting in epistemic states (DFPes-1..6)

// DFPes-1, 3 and 6 are checked on (k1, P) and (k2, P); DFPes-2 on both
// orderings of (k1, k2); DFPes-4 and 5 on (k1, P1, P2) and (k2, P1, P2).
// DFPes-3 ranges over every P' ⊆ P ∩ Σ and reports the first failure.
std::vector<PostulateReport> check_dfpes_signature(const SignatureForgetOperator& op, const Ocf& k1,
                                                   const Ocf& k2, const Signature& p,
                                                   const Signature& p1, const Signature& p2);
std::vector<PostulateReport> replay_dfpes_signature(const SignatureForgetOperator& op,
                                                    const Json& witness);

namespace dfpes_signature {
PostulateReport monotony(const SignatureForgetOperator& op, const Ocf& k, const Signature& p);
PostulateReport entailment(const SignatureForgetOperator& op, const Ocf& k1, const Ocf& k2,
                           const Signature& p);
PostulateReport repeated(const SignatureForgetOperator& op, const Ocf& k, const Signature& p);
PostulateReport intersection(const SignatureForgetOperator& op, const Ocf& k, const Signature& p1,
                             const Signature& p2);
PostulateReport iterated(const SignatureForgetOperator& op, const Ocf& k, const Signature& p1,
                         const Signature& p2);
PostulateReport lifting(const SignatureForgetOperator& op, const Ocf& k, const Signature& p);
}  // namespace dfpes_signature

// Bel(κ|Σ\P) ⊨ Bel(κ ∘ P). The note says whether the entailment is strict.
PostulateReport check_most_specific(const SignatureForgetOperator& op, const Ocf& k,
                                    const Signature& p);

// }}}

// {{{ Formula forgetting in epistemic states (DFPes-L-1..6)

// DFPes-L-1 and 6 run on both states and both formulas, DFPes-L-2 on both
// state orderings, DFPes-L-4 and 5 on (φ, ψ) and (ψ, φ). DFPes-L-3 runs on
// each pair (a, b) with a ⊨ b among (φ, ψ), (ψ, φ), (φ∧ψ, φ), (φ∧ψ, ψ).
std::vector<PostulateReport> check_dfpes_formula(const FormulaForgetOperator& op,
                                                 const BeliefState& s1, const BeliefState& s2,
                                                 const Formula& phi, const Formula& psi);
std::vector<PostulateReport> replay_dfpes_formula(const FormulaForgetOperator& op,
                                                  const Json& witness);

namespace dfpes_formula {
PostulateReport monotony(const FormulaForgetOperator& op, const BeliefState& s, const Formula& phi);
PostulateReport entailment(const FormulaForgetOperator& op, const BeliefState& s1,
                           const BeliefState& s2, const Formula& phi);
// `specific` ⊨ `general` is required; otherwise the report is NotApplicable.
PostulateReport repeated(const FormulaForgetOperator& op, const BeliefState& s,
                         const Formula& specific, const Formula& general);
PostulateReport disjunction(const FormulaForgetOperator& op, const BeliefState& s,
                            const Formula& phi, const Formula& psi);
PostulateReport iterated(const FormulaForgetOperator& op, const BeliefState& s, const Formula& phi,
                         const Formula& psi);
PostulateReport success(const FormulaForgetOperator& op, const BeliefState& s, const Formula& phi);
}  // namespace dfpes_formula

// If φ ≡ ψ then Bel(Ψ ∘ φ) ≡ Bel(Ψ ∘ ψ); NotApplicable when φ ≢ ψ.
PostulateReport check_syntax_independence(const FormulaForgetOperator& op, const BeliefState& s,
                                          const Formula& phi, const Formula& psi);

// Bel(Ψ ∘ φ) ≡ Bel(Ψ ∘ (φ∧ψ)) ≡ Bel(Ψ ∘ ψ). Only meaningful for operators
// satisfying DFPes-L-1..6, so the operator is first screened on the state's
// signature (see find_dfpes_formula_violation); a failing operator yields
// NotApplicable naming the violated postulate.
PostulateReport check_conjunction_collapse(const FormulaForgetOperator& op, const BeliefState& s,
                                           const Formula& phi, const Formula& psi);

// Searches for an instance over `signature` on which `op` violates one of
// DFPes-L-1..6. Exhaustive over consistent states and formula classes up to
// 2 atoms; above that, `samples` seeded random instances.
struct ScreeningResult {
  std::optional<PostulateReport> violation;
  bool exhaustive = false;
  std::size_t instances = 0;
};
ScreeningResult find_dfpes_formula_violation(const FormulaForgetOperator& op,
                                             const Signature& signature,
                                             std::size_t samples = 500,
                                             std::uint64_t seed = 0);

// }}}

}  // namespace oblivion
