#include "oblivion/formula.hpp"

#include <algorithm>
#include <cctype>

#include "oblivion/error.hpp"
#include "oblivion/signature.hpp"

namespace oblivion {

Formula Formula::Atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::Top() {
  static const Formula top(std::make_shared<const Node>(Node{Connective::Top, {}, nullptr, nullptr}));
  return top;
}

Formula Formula::Bottom() {
  static const Formula bottom(
      std::make_shared<const Node>(Node{Connective::Bottom, {}, nullptr, nullptr}));
  return bottom;
}

Formula Formula::Not(Formula operand) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Not, {}, std::make_unique<Formula>(std::move(operand)), nullptr}));
}

Formula Formula::Binary(Connective connective, Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{connective, {},
                                                   std::make_unique<Formula>(std::move(lhs)),
                                                   std::make_unique<Formula>(std::move(rhs))}));
}

Formula Formula::And(Formula lhs, Formula rhs) { return Binary(Connective::And, std::move(lhs), std::move(rhs)); }
Formula Formula::Or(Formula lhs, Formula rhs) { return Binary(Connective::Or, std::move(lhs), std::move(rhs)); }
Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Binary(Connective::Implies, std::move(lhs), std::move(rhs));
}
Formula Formula::Iff(Formula lhs, Formula rhs) { return Binary(Connective::Iff, std::move(lhs), std::move(rhs)); }

bool Formula::is_binary() const {
  switch (connective()) {
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
    case Connective::Iff:
      return true;
    default:
      return false;
  }
}

namespace {

void CollectAtoms(const Formula& f, std::set<std::string>& out) {
  switch (f.connective()) {
    case Connective::Atom:
      out.insert(f.name());
      break;
    case Connective::Top:
    case Connective::Bottom:
      break;
    case Connective::Not:
      CollectAtoms(f.lhs(), out);
      break;
    default:
      CollectAtoms(f.lhs(), out);
      CollectAtoms(f.rhs(), out);
  }
}

}  // namespace

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  CollectAtoms(*this, out);
  return out;
}

std::size_t Formula::depth() const {
  if (connective() == Connective::Not) return 1 + lhs().depth();
  if (is_binary()) return 1 + std::max(lhs().depth(), rhs().depth());
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective()) return false;
  switch (a.connective()) {
    case Connective::Atom:
      return a.name() == b.name();
    case Connective::Top:
    case Connective::Bottom:
      return true;
    case Connective::Not:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// {{{ Parsing

namespace {

enum class Tok { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { Advance(); }

  Formula ParseAll() {
    Formula f = ParseIff();
    if (tok_.kind != Tok::End) Fail("unexpected '" + tok_.text + "'");
    return f;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, 0, tok_.column);
  }

  void Advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t column = pos_ + 1;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, "end of input", column};
      return;
    }
    const char c = text_[pos_];
    auto take = [&](Tok kind, std::size_t len) {
      tok_ = {kind, std::string(text_.substr(pos_, len)), column};
      pos_ += len;
    };
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::islower(static_cast<unsigned char>(text_[end])) ||
                                    std::isdigit(static_cast<unsigned char>(text_[end])) ||
                                    text_[end] == '_')) {
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      Tok kind = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Atom;
      take(kind, end - pos_);
      return;
    }
    switch (c) {
      case '!': return take(Tok::Not, 1);
      case '&': return take(Tok::And, 1);
      case '|': return take(Tok::Or, 1);
      case '(': return take(Tok::LParen, 1);
      case ')': return take(Tok::RParen, 1);
      default: break;
    }
    if (text_.substr(pos_, 2) == "->") return take(Tok::Implies, 2);
    if (text_.substr(pos_, 3) == "<->") return take(Tok::Iff, 3);
    tok_ = {Tok::End, std::string(1, c), column};
    Fail("unexpected character '" + std::string(1, c) + "'");
  }

  Formula ParseIff() {
    Formula lhs = ParseImplies();
    while (tok_.kind == Tok::Iff) {
      Advance();
      lhs = Formula::Iff(std::move(lhs), ParseImplies());
    }
    return lhs;
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (tok_.kind != Tok::Implies) return lhs;
    Advance();
    return Formula::Implies(std::move(lhs), ParseImplies());
  }

  Formula ParseOr() {
    Formula lhs = ParseAnd();
    while (tok_.kind == Tok::Or) {
      Advance();
      lhs = Formula::Or(std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  Formula ParseAnd() {
    Formula lhs = ParseUnary();
    while (tok_.kind == Tok::And) {
      Advance();
      lhs = Formula::And(std::move(lhs), ParseUnary());
    }
    return lhs;
  }

  Formula ParseUnary() {
    switch (tok_.kind) {
      case Tok::Not:
        Advance();
        return Formula::Not(ParseUnary());
      case Tok::LParen: {
        Advance();
        Formula inner = ParseIff();
        if (tok_.kind != Tok::RParen) Fail("expected ')' but found '" + tok_.text + "'");
        Advance();
        return inner;
      }
      case Tok::True:
        Advance();
        return Formula::Top();
      case Tok::False:
        Advance();
        return Formula::Bottom();
      case Tok::Atom: {
        std::string name = tok_.text;
        Advance();
        return Formula::Atom(std::move(name));
      }
      case Tok::End:
        Fail("unexpected end of input");
      default:
        Fail("unexpected '" + tok_.text + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, "", 1};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).ParseAll(); }

// }}}

// {{{ Rendering

namespace {

int Precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    default: return 6;
  }
}

const char* Symbol(Connective c) {
  switch (c) {
    case Connective::Iff: return " <-> ";
    case Connective::Implies: return " -> ";
    case Connective::Or: return " | ";
    case Connective::And: return " & ";
    default: return "";
  }
}

void Render(const Formula& f, std::string& out);

void RenderChild(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  Render(child, out);
  if (parens) out += ')';
}

void Render(const Formula& f, std::string& out) {
  switch (f.connective()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Top:
      out += "true";
      return;
    case Connective::Bottom:
      out += "false";
      return;
    case Connective::Not:
      out += '!';
      RenderChild(f.lhs(), f.lhs().is_binary(), out);
      return;
    default:
      break;
  }
  const Connective c = f.connective();
  const int p = Precedence(c);
  const bool right_assoc = c == Connective::Implies;
  const int lp = Precedence(f.lhs().connective());
  const int rp = Precedence(f.rhs().connective());
  const bool conj_under_disj = c == Connective::Or;
  bool lparen = lp < p || (lp == p && right_assoc) ||
                (conj_under_disj && f.lhs().connective() == Connective::And);
  bool rparen = rp < p || (rp == p && !right_assoc) ||
                (conj_under_disj && f.rhs().connective() == Connective::And);
  RenderChild(f.lhs(), lparen, out);
  out += Symbol(c);
  RenderChild(f.rhs(), rparen, out);
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  Render(f, out);
  return out;
}

// }}}

}  // namespace oblivion
