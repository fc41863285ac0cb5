#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oblivion/formula.hpp"
#include "oblivion/logic.hpp"
#include "oblivion/signature.hpp"

namespace oblivion {

// A finite set of formulas Γ over a signature.
class KnowledgeBase {
 public:
  // Throws UnknownAtomError if a formula mentions an atom outside `signature`.
  KnowledgeBase(Signature signature, std::vector<Formula> formulas);
  // Signature is the union of the mentioned atoms.
  explicit KnowledgeBase(std::vector<Formula> formulas);

  const Signature& signature() const { return signature_; }
  const std::vector<Formula>& formulas() const { return formulas_; }

  BeliefState models() const;

 private:
  Signature signature_;
  std::vector<Formula> formulas_;
};

// `.kb` text: one formula per line, '#' starts a comment, blank lines are
// skipped, and an optional "sig: p b f" line pins the signature. Parse errors
// carry the 1-based line number.
KnowledgeBase parse_knowledge_base(std::string_view text);
KnowledgeBase read_knowledge_base_file(const std::string& path);

}  // namespace oblivion
