#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace oblivion {

enum class Connective { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

// Immutable propositional formula. Subtrees are shared between copies.
class Formula {
 public:
  static Formula Atom(std::string name);
  static Formula Top();
  static Formula Bottom();
  static Formula Not(Formula operand);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);
  static Formula Binary(Connective connective, Formula lhs, Formula rhs);

  Connective connective() const { return node_->connective; }
  bool is_binary() const;

  // Only valid for Atom.
  const std::string& name() const { return node_->name; }
  // Operand of Not, or left operand of a binary connective.
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  std::set<std::string> atoms() const;
  std::size_t depth() const;

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Connective connective;
    std::string name;
    std::unique_ptr<Formula> lhs;
    std::unique_ptr<Formula> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Grammar, loosest binding first:
//   iff     := implies ("<->" implies)*        left associative
//   implies := or ("->" implies)?              right associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "(" iff ")" | "true" | "false" | atom
// Throws ParseError carrying the 1-based column of the offending token.
Formula parse_formula(std::string_view text);

// Prints with the fewest parentheses the grammar needs, except that a
// conjunction directly under a disjunction is always parenthesised.
std::string render_formula(const Formula& f);

}  // namespace oblivion
