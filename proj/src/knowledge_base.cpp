#include "oblivion/knowledge_base.hpp"

#include <fstream>
#include <sstream>

#include "oblivion/error.hpp"

namespace oblivion {

namespace {

Signature MentionedAtoms(const std::vector<Formula>& formulas) {
  std::vector<std::string> atoms;
  for (const Formula& f : formulas) {
    for (const auto& a : f.atoms()) atoms.push_back(a);
  }
  return Signature(std::move(atoms));
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

KnowledgeBase::KnowledgeBase(Signature signature, std::vector<Formula> formulas)
    : signature_(std::move(signature)), formulas_(std::move(formulas)) {
  for (const Formula& f : formulas_) {
    for (const auto& a : f.atoms()) {
      if (!signature_.contains(a)) throw UnknownAtomError(a);
    }
  }
}

KnowledgeBase::KnowledgeBase(std::vector<Formula> formulas)
    : signature_(MentionedAtoms(formulas)), formulas_(std::move(formulas)) {}

BeliefState KnowledgeBase::models() const { return oblivion::models(formulas_, signature_); }

KnowledgeBase parse_knowledge_base(std::string_view text) {
  std::optional<Signature> pinned;
  std::vector<Formula> formulas;
  std::vector<std::size_t> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    if (line.substr(0, 4) == "sig:") {
      if (pinned) throw ParseError("duplicate 'sig:' header", line_no, 1);
      try {
        pinned = parse_atom_list(line.substr(4));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, 1);
      }
      continue;
    }
    try {
      formulas.push_back(parse_formula(line));
      lines.push_back(line_no);
    } catch (const ParseError& e) {
      const auto offset = static_cast<std::size_t>(line.data() - raw.data());
      throw ParseError(e.message(), line_no, e.column() + offset);
    }
  }
  if (!pinned) {
    try {
      return KnowledgeBase(std::move(formulas));
    } catch (const Error& e) {
      throw ParseError(e.what(), 0, 1);
    }
  }
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    for (const auto& a : formulas[i].atoms()) {
      if (!pinned->contains(a)) {
        throw ParseError("atom '" + a + "' is not in the pinned signature " + pinned->to_string(),
                         lines[i], 1);
      }
    }
  }
  return KnowledgeBase(*pinned, std::move(formulas));
}

KnowledgeBase read_knowledge_base_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open knowledge base '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_knowledge_base(buf.str());
}

}  // namespace oblivion
