#include "oblivion/forgetting.hpp"

#include "oblivion/error.hpp"

namespace oblivion {

BeliefState forget_reduced(const BeliefState& bs, const Signature& forget) {
  return reduce_worlds(bs, bs.signature().minus(forget));
}

BeliefState forget_reduced(const KnowledgeBase& kb, const Signature& forget) {
  return forget_reduced(kb.models(), forget);
}

BeliefState forget_original(const BeliefState& bs, const Signature& forget) {
  return expand_worlds(forget_reduced(bs, forget), bs.signature());
}

BeliefState forget_original(const KnowledgeBase& kb, const Signature& forget) {
  return forget_original(kb.models(), forget);
}

Formula substitute(const Formula& f, std::string_view atom, bool value) {
  switch (f.connective()) {
    case Connective::Atom:
      if (f.name() == atom) return value ? Formula::Top() : Formula::Bottom();
      return f;
    case Connective::Top:
    case Connective::Bottom:
      return f;
    case Connective::Not:
      return Formula::Not(substitute(f.lhs(), atom, value));
    default:
      return Formula::Binary(f.connective(), substitute(f.lhs(), atom, value),
                             substitute(f.rhs(), atom, value));
  }
}

Formula boole_forget(const Formula& f, std::string_view atom) {
  return Formula::Or(substitute(f, atom, true), substitute(f, atom, false));
}

bool check_boole_equivalence(const Formula& f, std::string_view atom, const Signature& signature) {
  if (!signature.contains(atom)) throw UnknownAtomError(std::string(atom));
  const BeliefState eliminated = models(boole_forget(f, atom), signature);
  const KnowledgeBase kb(signature, {f});
  return eliminated == forget_original(kb, Signature({atom}));
}

}  // namespace oblivion
