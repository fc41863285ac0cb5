#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oblivion/error.hpp"
#include "oblivion/knowledge_base.hpp"

using namespace oblivion;

namespace {
ParseError ParseFailure(std::string_view text) {
  try {
    parse_knowledge_base(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}
}  // namespace

TEST_CASE("bundled bird knowledge base") {
  const KnowledgeBase kb = read_knowledge_base_file(OBLIVION_DATA_DIR "/birds.kb");
  CHECK(kb.signature() == Signature{"p", "b", "f"});
  CHECK(kb.formulas().size() == 4);
  CHECK(kb.models().size() == 3);
}

TEST_CASE("signature defaults to the mentioned atoms") {
  const KnowledgeBase kb = parse_knowledge_base("# comment\n\np -> q   # trailing\n r\n");
  CHECK(kb.signature() == Signature{"p", "q", "r"});
  CHECK(kb.formulas().size() == 2);
}

TEST_CASE("a pinned signature may add atoms") {
  const KnowledgeBase kb = parse_knowledge_base("sig: p q\np\n");
  CHECK(kb.signature() == Signature{"p", "q"});
  CHECK(kb.models().size() == 2);
}

TEST_CASE("empty and contradictory bases") {
  CHECK(parse_knowledge_base("sig: p\n").models().size() == 2);
  CHECK(parse_knowledge_base("").models().size() == 1);
  CHECK_FALSE(parse_knowledge_base("p\n!p\n").models().consistent());
}

TEST_CASE("parse errors carry line and column") {
  const ParseError e = ParseFailure("p -> b\n\n# x\nf & \n");
  CHECK(e.line() == 4);
  CHECK(e.column() == 4);
  CHECK(std::string(e.what()).find("line 4") != std::string::npos);

  CHECK(ParseFailure("sig: p\nq\n").line() == 2);
  CHECK(ParseFailure("  p && q\n").column() == 6);
  CHECK(ParseFailure("sig: p\nsig: p\n").line() == 2);
  CHECK(ParseFailure("sig: p Q\n").line() == 1);
}

TEST_CASE("constructor validates atoms") {
  CHECK_THROWS_AS(KnowledgeBase(Signature{"p"}, {parse_formula("q")}), UnknownAtomError);
  CHECK(KnowledgeBase({parse_formula("q & p")}).signature() == Signature{"p", "q"});
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_knowledge_base_file("/nonexistent/birds.kb"), Error);
}
