#include "oblivion/logic.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "oblivion/error.hpp"

namespace oblivion {

World::World(Signature signature, WorldCode code) : signature_(std::move(signature)), code_(code) {
  if (code_ >= signature_.world_count()) {
    throw Error("world code " + std::to_string(code_) + " out of range for " +
                signature_.to_string());
  }
}

bool World::value(std::size_t atom_index) const {
  return (code_ >> world_bit(atom_index, signature_.size())) & 1u;
}

bool World::value(std::string_view atom) const {
  auto index = signature_.index_of(atom);
  if (!index) throw UnknownAtomError(std::string(atom));
  return value(*index);
}

std::string render_world(const World& w) {
  std::string out;
  for (std::size_t i = 0; i < w.signature().size(); ++i) {
    if (i > 0) out += ' ';
    if (!w.value(i)) out += '-';
    out += w.signature()[i];
  }
  return out;
}

World parse_world(std::string_view text, const Signature& signature) {
  std::istringstream in{std::string(text)};
  std::vector<bool> seen(signature.size(), false);
  WorldCode code = 0;
  std::string literal;
  while (in >> literal) {
    const bool negative = literal[0] == '-';
    const std::string atom = negative ? literal.substr(1) : literal;
    auto index = signature.index_of(atom);
    if (!index) throw UnknownAtomError(atom);
    if (seen[*index]) throw Error("atom '" + atom + "' assigned twice in world '" + std::string(text) + "'");
    seen[*index] = true;
    if (!negative) code |= WorldCode{1} << world_bit(*index, signature.size());
  }
  for (std::size_t i = 0; i < signature.size(); ++i) {
    if (!seen[i]) {
      throw Error("world '" + std::string(text) + "' does not assign atom '" + signature[i] + "'");
    }
  }
  return World(signature, code);
}

// {{{ BeliefState

BeliefState::BeliefState(Signature signature) : signature_(std::move(signature)) {}

BeliefState::BeliefState(Signature signature, std::vector<WorldCode> codes)
    : signature_(std::move(signature)), codes_(std::move(codes)) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  if (!codes_.empty() && codes_.back() >= signature_.world_count()) {
    throw Error("world code out of range for " + signature_.to_string());
  }
}

BeliefState::BeliefState(Signature signature, std::span<const World> worlds)
    : signature_(std::move(signature)) {
  codes_.reserve(worlds.size());
  for (const World& w : worlds) {
    require_same_signature(w.signature(), signature_, "world in belief state");
    codes_.push_back(w.code());
  }
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

BeliefState BeliefState::all_worlds(Signature signature) {
  std::vector<WorldCode> codes(signature.world_count());
  for (WorldCode c = 0; c < codes.size(); ++c) codes[c] = c;
  return BeliefState(std::move(signature), std::move(codes));
}

std::vector<World> BeliefState::worlds() const {
  std::vector<World> out;
  out.reserve(codes_.size());
  for (WorldCode c : codes_) out.emplace_back(signature_, c);
  return out;
}

bool BeliefState::contains(WorldCode code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

bool BeliefState::contains(const World& w) const {
  return w.signature() == signature_ && contains(w.code());
}

bool BeliefState::is_subset_of(const BeliefState& other) const {
  require_same_signature(signature_, other.signature_, "model-set inclusion");
  return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
}

BeliefState united(const BeliefState& a, const BeliefState& b) {
  require_same_signature(a.signature(), b.signature(), "model-set union");
  std::vector<WorldCode> out;
  std::set_union(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(),
                 std::back_inserter(out));
  return BeliefState(a.signature(), std::move(out));
}

BeliefState intersected(const BeliefState& a, const BeliefState& b) {
  require_same_signature(a.signature(), b.signature(), "model-set intersection");
  std::vector<WorldCode> out;
  std::set_intersection(a.codes().begin(), a.codes().end(), b.codes().begin(), b.codes().end(),
                        std::back_inserter(out));
  return BeliefState(a.signature(), std::move(out));
}

void require_same_signature(const Signature& a, const Signature& b, std::string_view what) {
  if (a != b) {
    throw SignatureMismatchError(std::string(what) + ": signature " + a.to_string() +
                                 " does not match " + b.to_string());
  }
}

// }}}

// {{{ Evaluation

namespace {

// Formula with atoms resolved to bit positions of a fixed signature.
struct Resolved {
  Connective connective;
  unsigned bit = 0;
  std::vector<Resolved> children;

  bool Eval(WorldCode code) const {
    switch (connective) {
      case Connective::Atom: return (code >> bit) & 1u;
      case Connective::Top: return true;
      case Connective::Bottom: return false;
      case Connective::Not: return !children[0].Eval(code);
      case Connective::And: return children[0].Eval(code) && children[1].Eval(code);
      case Connective::Or: return children[0].Eval(code) || children[1].Eval(code);
      case Connective::Implies: return !children[0].Eval(code) || children[1].Eval(code);
      case Connective::Iff: return children[0].Eval(code) == children[1].Eval(code);
    }
    return false;
  }
};

Resolved Resolve(const Formula& f, const Signature& signature) {
  Resolved r{f.connective(), 0, {}};
  switch (f.connective()) {
    case Connective::Atom: {
      auto index = signature.index_of(f.name());
      if (!index) throw UnknownAtomError(f.name());
      r.bit = world_bit(*index, signature.size());
      break;
    }
    case Connective::Top:
    case Connective::Bottom:
      break;
    case Connective::Not:
      r.children.push_back(Resolve(f.lhs(), signature));
      break;
    default:
      r.children.push_back(Resolve(f.lhs(), signature));
      r.children.push_back(Resolve(f.rhs(), signature));
  }
  return r;
}

}  // namespace

bool evaluate(const World& w, const Formula& f) {
  return Resolve(f, w.signature()).Eval(w.code());
}

BeliefState models(const Formula& f, const Signature& signature) {
  const Resolved r = Resolve(f, signature);
  std::vector<WorldCode> codes;
  for (WorldCode c = 0; c < signature.world_count(); ++c) {
    if (r.Eval(c)) codes.push_back(c);
  }
  return BeliefState(signature, std::move(codes));
}

BeliefState models(std::span<const Formula> formulas, const Signature& signature) {
  std::vector<Resolved> resolved;
  resolved.reserve(formulas.size());
  for (const Formula& f : formulas) resolved.push_back(Resolve(f, signature));
  std::vector<WorldCode> codes;
  for (WorldCode c = 0; c < signature.world_count(); ++c) {
    if (std::all_of(resolved.begin(), resolved.end(), [c](const Resolved& r) { return r.Eval(c); })) {
      codes.push_back(c);
    }
  }
  return BeliefState(signature, std::move(codes));
}

bool entails(const BeliefState& bs, const Formula& f) {
  const Resolved r = Resolve(f, bs.signature());
  return std::all_of(bs.codes().begin(), bs.codes().end(), [&](WorldCode c) { return r.Eval(c); });
}

bool equivalent(const BeliefState& a, const BeliefState& b) {
  require_same_signature(a.signature(), b.signature(), "equivalence");
  return a.codes() == b.codes();
}

// }}}

Formula world_formula(const World& w) {
  const Signature& sig = w.signature();
  if (sig.empty()) return Formula::Top();
  auto literal = [&](std::size_t i) {
    Formula atom = Formula::Atom(sig[i]);
    return w.value(i) ? atom : Formula::Not(atom);
  };
  Formula out = literal(0);
  for (std::size_t i = 1; i < sig.size(); ++i) out = Formula::And(out, literal(i));
  return out;
}

Formula canonical_formula(const BeliefState& bs) {
  if (!bs.consistent()) return Formula::Bottom();
  if (bs.is_all_worlds()) return Formula::Top();
  const auto worlds = bs.worlds();
  Formula out = world_formula(worlds.front());
  for (std::size_t i = 1; i < worlds.size(); ++i) out = Formula::Or(out, world_formula(worlds[i]));
  return out;
}

// {{{ Reduction and expansion

namespace {

// For each atom of `sub`, the bit it occupies in codes over `full`.
std::vector<unsigned> SourceBits(const Signature& sub, const Signature& full) {
  std::vector<unsigned> bits;
  bits.reserve(sub.size());
  for (const auto& atom : sub.atoms()) {
    bits.push_back(world_bit(*full.index_of(atom), full.size()));
  }
  return bits;
}

WorldCode Project(WorldCode code, const std::vector<unsigned>& source_bits) {
  const std::size_t n = source_bits.size();
  WorldCode out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((code >> source_bits[i]) & 1u) out |= WorldCode{1} << world_bit(i, n);
  }
  return out;
}

void RequireSubset(const Signature& sub, const Signature& super, std::string_view what) {
  if (!sub.is_subset_of(super)) {
    throw SignatureError(std::string(what) + ": " + sub.to_string() + " is not a subset of " +
                         super.to_string());
  }
}

}  // namespace

World reduce_world(const World& w, const Signature& sub) {
  RequireSubset(sub, w.signature(), "reduction");
  return World(sub, Project(w.code(), SourceBits(sub, w.signature())));
}

BeliefState reduce_worlds(const BeliefState& bs, const Signature& sub) {
  RequireSubset(sub, bs.signature(), "reduction");
  const auto bits = SourceBits(sub, bs.signature());
  std::vector<WorldCode> out;
  out.reserve(bs.size());
  for (WorldCode c : bs.codes()) out.push_back(Project(c, bits));
  return BeliefState(sub, std::move(out));
}

BeliefState expand_worlds(const BeliefState& bs, const Signature& super) {
  RequireSubset(bs.signature(), super, "expansion");
  const auto bits = SourceBits(bs.signature(), super);
  std::vector<WorldCode> out;
  for (WorldCode c = 0; c < super.world_count(); ++c) {
    if (bs.contains(Project(c, bits))) out.push_back(c);
  }
  return BeliefState(super, std::move(out));
}

// }}}

bool elementary_equivalent(const World& w1, const World& w2, const Signature& except) {
  require_same_signature(w1.signature(), w2.signature(), "elementary equivalence");
  const Signature& sig = w1.signature();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (except.contains(sig[i])) continue;
    if (w1.value(i) != w2.value(i)) return false;
  }
  return true;
}

std::vector<BeliefState> all_belief_states(const Signature& signature, bool consistent_only) {
  if (signature.size() > 4) {
    throw CapExceededError("belief-state enumeration is limited to 4 atoms, got " +
                           std::to_string(signature.size()));
  }
  const std::uint32_t worlds = signature.world_count();
  const std::uint64_t count = std::uint64_t{1} << worlds;
  std::vector<BeliefState> out;
  out.reserve(count);
  for (std::uint64_t mask = consistent_only ? 1 : 0; mask < count; ++mask) {
    std::vector<WorldCode> codes;
    for (WorldCode c = 0; c < worlds; ++c) {
      if ((mask >> c) & 1u) codes.push_back(c);
    }
    out.emplace_back(signature, std::move(codes));
  }
  return out;
}

}  // namespace oblivion
