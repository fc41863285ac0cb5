#pragma once

#include <string>
#include <string_view>

#include "oblivion/formula.hpp"
#include "oblivion/knowledge_base.hpp"
#include "oblivion/logic.hpp"

namespace oblivion {

// Knowledge-level forgetting of a signature P, computed on model sets.
//
// Atoms of P outside the signature are ignored, so forgetting P means
// forgetting P ∩ Σ. An inconsistent input yields the empty model set over the
// reduced signature (every formula of the reduced language is kept).

// F(Γ, P): the consequences of Γ that only mention atoms of Σ \ P, as a model
// set over Σ \ P. Equals the reduction of ⟦Γ⟧_Σ to Σ \ P.
BeliefState forget_reduced(const KnowledgeBase& kb, const Signature& forget);
BeliefState forget_reduced(const BeliefState& bs, const Signature& forget);

// F_O(Γ, P): F(Γ, P) read back in the original language, i.e. its expansion
// to Σ.
BeliefState forget_original(const KnowledgeBase& kb, const Signature& forget);
BeliefState forget_original(const BeliefState& bs, const Signature& forget);

// φ[atom/⊤] or φ[atom/⊥]. No simplification is performed.
Formula substitute(const Formula& f, std::string_view atom, bool value);

// Boole's variable elimination: φ[atom/⊤] ∨ φ[atom/⊥], unsimplified.
Formula boole_forget(const Formula& f, std::string_view atom);

// Whether the Boole elimination of `atom` from `f` has the same models over
// `signature` as F({f}, {atom}) expanded back to `signature`.
// Throws UnknownAtomError if `atom` or an atom of `f` is not in `signature`.
bool check_boole_equivalence(const Formula& f, std::string_view atom, const Signature& signature);

}  // namespace oblivion
