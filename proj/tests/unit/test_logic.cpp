#include <doctest.h>

#include "oblivion/error.hpp"
#include "oblivion/logic.hpp"
#include "oblivion/random.hpp"
#include "support/oracle.hpp"

using namespace oblivion;

namespace {

const Signature kBirds{"p", "b", "f"};

BeliefState Worlds(const Signature& sig, std::initializer_list<const char*> ws) {
  std::vector<World> out;
  for (const char* w : ws) out.push_back(parse_world(w, sig));
  return BeliefState(sig, out);
}

BeliefState Gamma() {
  return models(std::vector<Formula>{parse_formula("p -> b"), parse_formula("f -> !p"),
                                     parse_formula("f -> b"), parse_formula("!f -> (p | !b)")},
                kBirds);
}

}  // namespace

TEST_CASE("worlds: text form and values") {
  const World w = parse_world("p -b f", kBirds);
  CHECK(render_world(w) == "-b f p");
  CHECK(w.value("p"));
  CHECK_FALSE(w.value("b"));
  CHECK(w.value(std::size_t{1}));
  CHECK_THROWS_AS(w.value("q"), UnknownAtomError);
  CHECK(parse_world("-b f p", kBirds) == w);
  CHECK(render_world(World(Signature(), 0)).empty());
  CHECK_THROWS_AS(parse_world("p b", kBirds), Error);        // f missing
  CHECK_THROWS_AS(parse_world("p b f -p", kBirds), Error);   // p twice
  CHECK_THROWS_AS(parse_world("p b f q", kBirds), Error);    // unknown
}

TEST_CASE("world codes follow lexicographic assignment order") {
  const Signature sig{"a", "b"};
  CHECK(render_world(World(sig, 0)) == "-a -b");
  CHECK(render_world(World(sig, 1)) == "-a b");
  CHECK(render_world(World(sig, 2)) == "a -b");
  CHECK(render_world(World(sig, 3)) == "a b");
}

TEST_CASE("evaluate") {
  CHECK(evaluate(parse_world("-p -b -f", kBirds), parse_formula("p -> b")));
  CHECK(evaluate(parse_world("p b -f", kBirds), parse_formula("f -> !p")));
  CHECK_FALSE(evaluate(parse_world("p -b -f", kBirds), parse_formula("p -> b")));
  CHECK_THROWS_AS(evaluate(parse_world("p b f", kBirds), parse_formula("q")), UnknownAtomError);
  try {
    evaluate(parse_world("p b f", kBirds), parse_formula("p & zebra"));
  } catch (const UnknownAtomError& e) {
    CHECK(e.atom() == "zebra");
  }
}

TEST_CASE("models") {
  CHECK(Gamma() == Worlds(kBirds, {"-p -b -f", "p b -f", "-p b f"}));
  CHECK(models(Formula::Top(), kBirds).size() == 8);
  CHECK_FALSE(models(Formula::Bottom(), Signature{"p"}).consistent());
  CHECK(models(std::vector<Formula>{}, kBirds).is_all_worlds());
  CHECK_THROWS_AS(models(parse_formula("q"), kBirds), UnknownAtomError);
}

TEST_CASE("entails") {
  CHECK(entails(Gamma(), parse_formula("f -> b")));
  CHECK(entails(BeliefState(Signature{"p"}), Formula::Bottom()));
  CHECK_FALSE(entails(Gamma(), parse_formula("b")));
}

TEST_CASE("equivalent") {
  const Signature pb{"p", "b"};
  CHECK(equivalent(models(parse_formula("p & b"), pb), models(parse_formula("b & p"), pb)));
  const BeliefState fo = Worlds(kBirds, {"-p -b -f", "p -b -f", "p b -f", "-p b -f", "-p b f", "p b f"});
  CHECK_FALSE(equivalent(Gamma(), fo));
  CHECK(equivalent(Gamma(), models(canonical_formula(Gamma()), kBirds)));
  CHECK_THROWS_AS(equivalent(Gamma(), models(Formula::Top(), pb)), SignatureMismatchError);
}

TEST_CASE("canonical formula") {
  const Signature pb{"p", "b"};
  CHECK(render_formula(canonical_formula(Worlds(pb, {"p b", "-p -b"}))) == "(!b & !p) | (b & p)");
  CHECK(canonical_formula(BeliefState(Signature{"p"})) == Formula::Bottom());
  CHECK(canonical_formula(BeliefState::all_worlds(kBirds)) == Formula::Top());
  CHECK(canonical_formula(BeliefState::all_worlds(Signature())) == Formula::Top());
}

TEST_CASE("canonical formula roundtrip: every state up to three atoms") {
  for (const auto& sig : {Signature(), Signature{"p"}, Signature{"p", "q"}, Signature{"p", "q", "r"}}) {
    for (const auto& bs : all_belief_states(sig, false)) {
      REQUIRE(models(canonical_formula(bs), sig) == bs);
    }
  }
}

TEST_CASE("reduce and expand") {
  const Signature bf{"b", "f"};
  CHECK(reduce_worlds(Gamma(), bf) == Worlds(bf, {"-b -f", "b -f", "b f"}));
  CHECK(reduce_worlds(Gamma(), kBirds) == Gamma());
  const Signature pb{"p", "b"};
  CHECK(reduce_worlds(Worlds(pb, {"p b", "p -b"}), Signature{"p"}) == Worlds(Signature{"p"}, {"p"}));
  CHECK(expand_worlds(Worlds(bf, {"-b -f", "b -f", "b f"}), kBirds) ==
        Worlds(kBirds, {"-p -b -f", "p -b -f", "p b -f", "-p b -f", "-p b f", "p b f"}));
  CHECK(expand_worlds(Gamma(), kBirds) == Gamma());
  CHECK(expand_worlds(Worlds(Signature{"p"}, {"p"}), Signature{"p", "q"}) ==
        Worlds(Signature{"p", "q"}, {"p q", "p -q"}));
  CHECK_THROWS_AS(reduce_worlds(Gamma(), Signature{"q"}), SignatureError);
  CHECK_THROWS_AS(expand_worlds(Gamma(), bf), SignatureError);
  // Reducing to the empty signature keeps consistency and nothing else.
  CHECK(reduce_worlds(Gamma(), Signature()).size() == 1);
  CHECK(reduce_worlds(BeliefState(kBirds), Signature()).size() == 0);
}

TEST_CASE("elementary equivalence") {
  const World a = parse_world("p b -f", kBirds);
  CHECK(elementary_equivalent(a, a, Signature()));
  CHECK_FALSE(elementary_equivalent(a, parse_world("-p b -f", kBirds), Signature()));
  CHECK(elementary_equivalent(a, parse_world("-p b -f", kBirds), Signature{"p"}));
  CHECK_FALSE(elementary_equivalent(a, parse_world("p b f", kBirds), Signature{"p"}));
  CHECK_THROWS_AS(elementary_equivalent(a, World(Signature{"p"}, 0), Signature()), SignatureMismatchError);
}

TEST_CASE("set operations require a shared signature") {
  const BeliefState a = Worlds(Signature{"p"}, {"p"});
  const BeliefState b = Worlds(Signature{"p"}, {"-p"});
  CHECK(united(a, b).is_all_worlds());
  CHECK_FALSE(intersected(a, b).consistent());
  CHECK(a.is_subset_of(united(a, b)));
  CHECK_THROWS_AS(a.is_subset_of(Gamma()), SignatureMismatchError);
  CHECK_THROWS_AS(BeliefState(Signature{"p"}, std::vector<WorldCode>{2}), Error);
}

TEST_CASE("all_belief_states counts") {
  CHECK(all_belief_states(Signature{"p"}, false).size() == 4);
  CHECK(all_belief_states(Signature{"p", "q"}, true).size() == 15);
  CHECK(all_belief_states(Signature{"p", "q", "r"}, true).size() == 255);
}

// {{{ properties against the oracle

TEST_CASE("models agree with the truth-table oracle") {
  Rng rng(7);
  const Signature sig{"a", "b", "c", "d"};
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, sig, 5);
    REQUIRE(oracle::from(models(f, sig)) == oracle::models(f, sig.atoms()));
  }
}

TEST_CASE("reduce and expand agree with the oracle") {
  const Signature sig{"a", "b", "c"};
  for (const auto& bs : all_belief_states(sig, false)) {
    for (const auto& sub : sig.subsets()) {
      REQUIRE(oracle::from(reduce_worlds(bs, sub)) == oracle::reduce(oracle::from(bs), sub.atoms()));
    }
  }
  for (const auto& sub : sig.subsets()) {
    for (const auto& bs : all_belief_states(sub, false)) {
      REQUIRE(oracle::from(expand_worlds(bs, sig)) == oracle::expand(oracle::from(bs), sig.atoms()));
    }
  }
}

TEST_CASE("projection composition, exhaustive up to four atoms") {
  for (std::size_t n = 0; n <= 4; ++n) {
    static const char* kNames[] = {"a", "b", "c", "d"};
    const Signature sig(std::vector<std::string>(kNames, kNames + n));
    const auto subs = sig.subsets();
    for (const auto& bs : all_belief_states(sig, false)) {
      for (const auto& mid : subs) {
        const BeliefState once = reduce_worlds(bs, mid);
        for (const auto& low : mid.subsets()) {
          REQUIRE(reduce_worlds(once, low) == reduce_worlds(bs, low));
        }
      }
    }
  }
}

TEST_CASE("Galois bounds, exhaustive up to three atoms") {
  for (const auto& sig : {Signature{"a"}, Signature{"a", "b"}, Signature{"a", "b", "c"}}) {
    for (const auto& sub : sig.subsets()) {
      for (const auto& bs : all_belief_states(sig, false)) {
        REQUIRE(bs.is_subset_of(expand_worlds(reduce_worlds(bs, sub), sig)));
      }
      for (const auto& small : all_belief_states(sub, false)) {
        REQUIRE(reduce_worlds(expand_worlds(small, sig), sub) == small);
      }
    }
  }
}

TEST_CASE("entailment between canonical formulas agrees with truth tables") {
  for (const auto& sig : {Signature{"a"}, Signature{"a", "b"}, Signature{"a", "b", "c"}}) {
    const auto states = all_belief_states(sig, false);
    std::vector<Formula> formulas;
    for (const auto& bs : states) formulas.push_back(canonical_formula(bs));
    const auto worlds = oracle::all_assignments(sig.atoms());
    for (const auto& phi : formulas) {
      const BeliefState m = models(phi, sig);
      for (const auto& psi : formulas) {
        bool implied = true;
        for (const auto& w : worlds) implied = implied && (!oracle::eval(phi, w) || oracle::eval(psi, w));
        REQUIRE(entails(m, psi) == implied);
      }
    }
  }
}

// }}}
