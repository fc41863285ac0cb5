#include <doctest.h>

#include "oblivion/error.hpp"
#include "oblivion/forgetting.hpp"
#include "oblivion/knowledge_base.hpp"
#include "oblivion/random.hpp"
#include "support/oracle.hpp"

using namespace oblivion;

namespace {

const Signature kBirds{"p", "b", "f"};

KnowledgeBase Birds() { return read_knowledge_base_file(OBLIVION_DATA_DIR "/birds.kb"); }

BeliefState Worlds(const Signature& sig, std::initializer_list<const char*> ws) {
  std::vector<World> out;
  for (const char* w : ws) out.push_back(parse_world(w, sig));
  return BeliefState(sig, out);
}

}  // namespace

TEST_CASE("forget_reduced: bird example") {
  const Signature bf{"b", "f"};
  CHECK(forget_reduced(Birds(), Signature{"p"}) == Worlds(bf, {"-b -f", "b -f", "b f"}));
  CHECK(forget_reduced(Birds(), Signature()) == Birds().models());
  const BeliefState all = forget_reduced(Birds(), kBirds);
  CHECK(all.signature() == Signature());
  CHECK(all.size() == 1);
  const KnowledgeBase bad(kBirds, {parse_formula("p & !p")});
  CHECK(forget_reduced(bad, kBirds).size() == 0);
  CHECK(forget_reduced(bad, Signature{"p"}) == BeliefState(Signature{"b", "f"}));
}

TEST_CASE("forget_original: bird example") {
  CHECK(forget_original(Birds(), Signature{"p"}) ==
        Worlds(kBirds, {"-p -b -f", "p -b -f", "p b -f", "-p b -f", "-p b f", "p b f"}));
  CHECK(forget_original(Birds(), Signature()) == Birds().models());
}

TEST_CASE("forgetting ignores atoms outside the signature") {
  CHECK(forget_reduced(Birds(), Signature{"p", "zebra"}) == forget_reduced(Birds(), Signature{"p"}));
  CHECK(forget_original(Birds(), Signature{"zebra"}) == Birds().models());
}

TEST_CASE("forget_original is closed under flips of forgotten atoms") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const BeliefState bs = random_belief_state(rng, kBirds, true);
    const BeliefState fo = forget_original(bs, Signature{"p"});
    for (WorldCode c = 0; c < 8; ++c) {
      const WorldCode flipped = c ^ (1u << world_bit(*kBirds.index_of("p"), 3));
      REQUIRE(fo.contains(c) == fo.contains(flipped));
    }
  }
}

TEST_CASE("substitute performs no simplification") {
  const Formula pb = parse_formula("p & b");
  CHECK(substitute(pb, "p", true) == Formula::And(Formula::Top(), Formula::Atom("b")));
  CHECK(substitute(pb, "q", false) == pb);
  CHECK(substitute(parse_formula("p -> b"), "p", false) ==
        Formula::Implies(Formula::Bottom(), Formula::Atom("b")));
  CHECK(render_formula(substitute(parse_formula("!(p <-> p) | q"), "p", true)) == "!(true <-> true) | q");
}

TEST_CASE("boole_forget") {
  const Signature pb{"p", "b"};
  const Formula f = boole_forget(parse_formula("p & b"), "p");
  CHECK(render_formula(f) == "(true & b) | (false & b)");
  CHECK(oracle::models(f, pb.atoms()) == oracle::models(parse_formula("b"), pb.atoms()));
  const Formula g = boole_forget(parse_formula("b"), "p");
  CHECK(g == Formula::Or(Formula::Atom("b"), Formula::Atom("b")));
  CHECK(models(boole_forget(parse_formula("p"), "p"), pb).is_all_worlds());
}

TEST_CASE("check_boole_equivalence") {
  const Signature pb{"p", "b"};
  CHECK(check_boole_equivalence(parse_formula("p & b"), "p", pb));
  CHECK(check_boole_equivalence(Formula::Top(), "p", pb));
  CHECK_THROWS_AS(check_boole_equivalence(parse_formula("p"), "q", pb), UnknownAtomError);
}

TEST_CASE("Boole elimination equals Delgrande forgetting on every formula class up to three atoms") {
  for (const auto& sig : {Signature{"a"}, Signature{"a", "b"}, Signature{"p", "b", "f"}}) {
    for (const auto& bs : all_belief_states(sig, false)) {
      const Formula phi = canonical_formula(bs);
      for (const auto& atom : sig.atoms()) {
        REQUIRE(check_boole_equivalence(phi, atom, sig));
        // Independent route: truth-table models of the Boole formula vs the
        // expanded oracle reduction.
        std::vector<std::string> rest;
        for (const auto& a : sig.atoms()) if (a != atom) rest.push_back(a);
        REQUIRE(oracle::models(boole_forget(phi, atom), sig.atoms()) ==
                oracle::expand(oracle::reduce(oracle::from(bs), rest), sig.atoms()));
      }
    }
  }
}

// {{{ Delgrande's properties, checked directly with the oracle

TEST_CASE("forgetting agrees with oracle reduction") {
  const Signature sig{"a", "b", "c"};
  for (const auto& bs : all_belief_states(sig, false)) {
    for (const auto& p : sig.subsets()) {
      const auto keep = sig.minus(p).atoms();
      REQUIRE(oracle::from(forget_reduced(bs, p)) == oracle::reduce(oracle::from(bs), keep));
      REQUIRE(oracle::from(forget_original(bs, p)) ==
              oracle::expand(oracle::reduce(oracle::from(bs), keep), sig.atoms()));
    }
  }
}

TEST_CASE("DFP-1, 4, 5, 6, 7 exhaustively over three atoms") {
  const Signature sig{"a", "b", "c"};
  const auto subs = sig.subsets();
  for (const auto& bs : all_belief_states(sig, false)) {
    for (const auto& p : subs) {
      const BeliefState f = forget_reduced(bs, p);
      // Γ ⊨ F(Γ, P)
      REQUIRE(bs.is_subset_of(expand_worlds(f, sig)));
      // F(F(Γ, P'), P) = F(Γ, P) for P' ⊆ P
      for (const auto& p1 : p.subsets()) {
        REQUIRE(forget_reduced(forget_reduced(bs, p1), p) == f);
      }
      // F(Γ, P) = F_O(Γ, P) ∩ L_{Σ\P}
      REQUIRE(f == reduce_worlds(forget_original(bs, p), sig.minus(p)));
      for (const auto& p2 : subs) {
        const Signature both = p.united(p2);
        const Signature rest = sig.minus(both);
        const BeliefState whole = forget_reduced(bs, both);
        // Belief-set intersection is the union of the reduced model sets.
        REQUIRE(whole == united(reduce_worlds(f, rest), reduce_worlds(forget_reduced(bs, p2), rest)));
        REQUIRE(whole == forget_reduced(forget_reduced(bs, p), p2));
      }
    }
  }
}

TEST_CASE("DFP-2 exhaustively over two atoms") {
  const Signature sig{"a", "b"};
  const auto states = all_belief_states(sig, false);
  for (const auto& g1 : states) {
    for (const auto& g2 : states) {
      if (!g1.is_subset_of(g2)) continue;
      for (const auto& p : sig.subsets()) {
        REQUIRE(forget_reduced(g1, p).is_subset_of(forget_reduced(g2, p)));
      }
    }
  }
}

// }}}
