#include <doctest.h>

#include "oblivion/census.hpp"
#include "oblivion/error.hpp"
#include "oblivion/knowledge_base.hpp"
#include "oblivion/postulates.hpp"
#include "oblivion/random.hpp"

using namespace oblivion;

namespace {

const Signature kBirds{"p", "b", "f"};

Ocf BirdOcf() { return read_ocf_file(OBLIVION_DATA_DIR "/birds.ocf"); }
KnowledgeBase BirdKb() { return read_knowledge_base_file(OBLIVION_DATA_DIR "/birds.kb"); }

bool AllHold(const std::vector<PostulateReport>& rs) {
  for (const auto& r : rs) {
    if (!r.holds()) return false;
  }
  return true;
}

const PostulateReport& Find(const std::vector<PostulateReport>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.id == id) return r;
  }
  FAIL("no report " << id);
  return rs.front();
}

// Takes the maximum over extensions instead of the minimum, then
// renormalises. Not a sound forgetting operator.
SignatureForgetOperator MaxMarginalisation() {
  return {"max-marginalisation", [](const Ocf& k, const Signature& p) {
            const Signature rest = k.signature().minus(p);
            std::vector<std::int64_t> ranks(rest.world_count(), 0);
            for (WorldCode c = 0; c < k.signature().world_count(); ++c) {
              const WorldCode r = reduce_world(World(k.signature(), c), rest).code();
              ranks[r] = std::max(ranks[r], k.rank(c));
            }
            const auto low = *std::min_element(ranks.begin(), ranks.end());
            for (auto& r : ranks) r -= low;
            return Ocf(rest, ranks);
          }};
}

// Replaying a violated report's witness must reproduce the same violation.
void RequireReplays(const PostulateReport& r, const std::vector<PostulateReport>& replayed) {
  INFO(r.witness.dump());
  REQUIRE(r.witness.at("postulate") == r.id);
  bool found = false;
  for (const auto& x : replayed) found = found || (x.id == r.id && x.violated());
  REQUIRE(found);
}

}  // namespace

TEST_CASE("status names") {
  CHECK(to_string(Status::Holds) == "holds");
  CHECK(to_string(Status::Violated) == "violated");
  CHECK(to_string(Status::NotApplicable) == "not-applicable");
}

// {{{ DFP

TEST_CASE("DFP on the bird example") {
  const auto rs = check_dfp(BirdKb(), BirdKb(), Signature{"p"}, Signature{"b"});
  CHECK(rs.size() == 7);
  CHECK(AllHold(rs));
  CHECK(Find(rs, "DFP-3").note.find("construction") != std::string::npos);
  CHECK(AllHold(check_dfp(BirdKb(), BirdKb(), Signature(), Signature())));
}

TEST_CASE("DFP on random knowledge bases") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const BeliefState g1 = random_belief_state(rng, kBirds, false);
    const BeliefState g2 = random_belief_state(rng, kBirds, false);
    REQUIRE(AllHold(check_dfp(g1, g2, random_subsignature(rng, kBirds), random_subsignature(rng, kBirds))));
  }
}

TEST_CASE("DFP rejects mixed signatures") {
  const KnowledgeBase other(Signature{"p"}, {parse_formula("p")});
  CHECK_THROWS_AS(check_dfp(BirdKb(), other, Signature(), Signature()), SignatureMismatchError);
}

TEST_CASE("DFP replay reruns the full input set") {
  Json w;
  w["postulate"] = "DFP-5";
  w["operator"] = "delgrande";
  w["inputs"] = {{"signature", {"b", "f", "p"}},
                 {"kb", {"p -> b", "f -> !p"}},
                 {"kb2", {"true"}},
                 {"P", {"p"}},
                 {"P2", {"b"}}};
  const auto rs = replay_dfp(w);
  CHECK(rs.size() == 7);
  CHECK(AllHold(rs));
}

// }}}

// {{{ DFPes, signatures

TEST_CASE("marginalisation satisfies DFPes on the bird ranking") {
  const auto op = marginalisation_operator();
  const Ocf k = BirdOcf();
  CHECK(AllHold(check_dfpes_signature(op, k, k, Signature{"p"}, Signature{"b"}, Signature{"f"})));
  CHECK(AllHold(check_dfpes_signature(op, k, Ocf::uniform(kBirds), Signature(), Signature(), Signature())));
  const auto ms = check_most_specific(op, k, Signature{"p"});
  CHECK(ms.holds());
  CHECK(ms.note.rfind("equal", 0) == 0);
}

TEST_CASE("the belief-erasing operator is sound but strictly less informative") {
  const auto op = belief_erasing_operator();
  const Ocf k = BirdOcf();
  const auto rs = check_dfpes_signature(op, k, k, Signature{"p"}, Signature{"b"}, Signature{"f"});
  for (const char* id : {"DFPes-2", "DFPes-3", "DFPes-4", "DFPes-5", "DFPes-6"}) {
    CHECK(Find(rs, id).holds());
  }
  const auto ms = check_most_specific(op, k, Signature{"p"});
  CHECK(ms.holds());
  CHECK(ms.note.rfind("strict", 0) == 0);
}

TEST_CASE("most-specific holds for both operators on every 0/1 ranking over three atoms") {
  for (const auto& op : {marginalisation_operator(), belief_erasing_operator()}) {
    for (const auto& zero : all_belief_states(kBirds, true)) {
      for (const auto& p : kBirds.subsets()) {
        REQUIRE(check_most_specific(op, ocf_from_beliefs(zero), p).holds());
      }
    }
  }
}

TEST_CASE("operators returning the wrong signature are rejected") {
  const SignatureForgetOperator bad{"bad", [](const Ocf& k, const Signature&) { return k; }};
  CHECK_THROWS_AS(dfpes_signature::monotony(bad, BirdOcf(), Signature{"p"}), SignatureMismatchError);
  const FormulaForgetOperator worse{
      "worse", [](const BeliefState&, const Formula&) { return BeliefState::all_worlds(Signature{"z"}); }};
  CHECK_THROWS_AS(dfpes_formula::success(worse, models(Formula::Top(), kBirds), parse_formula("p")),
                  SignatureMismatchError);
}

TEST_CASE("max-marginalisation violations replay") {
  const auto op = MaxMarginalisation();
  Rng rng(8);
  std::size_t violated = 0;
  for (int i = 0; i < 400; ++i) {
    const Ocf k1 = random_ocf(rng, kBirds, 4);
    const Ocf k2 = random_ocf(rng, kBirds, 4);
    const auto rs = check_dfpes_signature(op, k1, k2, random_subsignature(rng, kBirds),
                                          random_subsignature(rng, kBirds), random_subsignature(rng, kBirds));
    for (const auto& r : rs) {
      if (!r.violated()) continue;
      ++violated;
      RequireReplays(r, replay_dfpes_signature(op, r.witness));
    }
  }
  CHECK(violated > 0);
}

// }}}

// {{{ DFPes, formulas

TEST_CASE("trivial operator") {
  const auto op = trivial_formula_operator();
  const BeliefState s = models(parse_formula("p & b"), kBirds);
  CHECK(op.apply(s, parse_formula("p")).is_all_worlds());
  CHECK(op.apply(s, Formula::Bottom()).is_all_worlds());
  CHECK(op.apply(op.apply(s, parse_formula("p")), parse_formula("p")) == op.apply(s, parse_formula("p")));
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    REQUIRE(AllHold(check_dfpes_formula(op, random_belief_state(rng, kBirds, true),
                                        random_belief_state(rng, kBirds, true),
                                        random_formula(rng, kBirds, 3), random_formula(rng, kBirds, 3))));
  }
}

TEST_CASE("identity violates success on a state believing p") {
  const auto op = identity_formula_operator();
  const BeliefState s = models(parse_formula("p & b"), kBirds);
  const auto r = dfpes_formula::success(op, s, parse_formula("p"));
  REQUIRE(r.violated());
  CHECK(r.witness.at("operator") == "identity");
  RequireReplays(r, replay_dfpes_formula(op, r.witness));
  const auto rs = check_dfpes_formula(op, s, s, parse_formula("p"), parse_formula("b"));
  CHECK(Find(rs, "DFPes-L-6").violated());
}

TEST_CASE("screening finds witnesses for non-trivial operators at two atoms") {
  const Signature pq{"p", "q"};
  for (const auto& op : {identity_formula_operator(), full_meet_contraction_operator()}) {
    const auto res = find_dfpes_formula_violation(op, pq);
    CHECK(res.exhaustive);
    REQUIRE(res.violation.has_value());
    RequireReplays(*res.violation, replay_dfpes_formula(op, res.violation->witness));
  }
  const auto ok = find_dfpes_formula_violation(trivial_formula_operator(), pq);
  CHECK_FALSE(ok.violation.has_value());
  CHECK(ok.instances > 0);
  const auto sampled = find_dfpes_formula_violation(identity_formula_operator(), kBirds, 200, 1);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.violation.has_value());
}

TEST_CASE("full-meet contraction") {
  const auto op = full_meet_contraction_operator();
  const BeliefState s = models(parse_formula("p & b"), kBirds);
  CHECK(op.apply(s, parse_formula("p")) == united(s, models(parse_formula("!p"), kBirds)));
  CHECK(op.apply(s, parse_formula("f")) == s);
  CHECK(op.apply(s, Formula::Top()) == s);
}

TEST_CASE("violations of arbitrary table operators replay") {
  const CensusReport shape = triviality_census(Signature{"p"});
  Rng rng(12);
  std::size_t violated = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<std::vector<std::uint32_t>> table(3, std::vector<std::uint32_t>(4));
    for (auto& row : table) {
      for (auto& o : row) o = static_cast<std::uint32_t>(rng.below(3));
    }
    const auto op = census_operator(shape, table, "table");
    for (const auto& s1 : all_belief_states(Signature{"p"}, true)) {
      for (const auto& s2 : all_belief_states(Signature{"p"}, true)) {
        const auto rs = check_dfpes_formula(op, s1, s2, random_formula(rng, Signature{"p"}, 2),
                                            random_formula(rng, Signature{"p"}, 2));
        for (const auto& r : rs) {
          if (!r.violated()) continue;
          ++violated;
          RequireReplays(r, replay_dfpes_formula(op, r.witness));
        }
      }
    }
  }
  CHECK(violated > 0);
}

TEST_CASE("syntax independence") {
  const BeliefState s = models(parse_formula("p"), kBirds);
  const Formula a = parse_formula("p & b");
  const Formula b = parse_formula("b & p");
  CHECK(check_syntax_independence(trivial_formula_operator(), s, a, b).holds());
  CHECK(check_syntax_independence(identity_formula_operator(), s, a, b).holds());
  CHECK(check_syntax_independence(trivial_formula_operator(), s, a, parse_formula("p")).status ==
        Status::NotApplicable);
  // Equivalence is semantic: any formula with the same models counts.
  CHECK(check_syntax_independence(full_meet_contraction_operator(), s, parse_formula("p -> b"),
                                  parse_formula("!p | b"))
            .holds());
}

TEST_CASE("conjunction collapse") {
  const BeliefState s = models(parse_formula("p & !b"), kBirds);
  const Formula phi = parse_formula("p");
  const Formula psi = parse_formula("b");
  CHECK(check_conjunction_collapse(trivial_formula_operator(), s, phi, psi).holds());
  const auto r = check_conjunction_collapse(identity_formula_operator(), s, phi, psi);
  CHECK(r.status == Status::NotApplicable);
  CHECK(r.note.find("precondition failed") != std::string::npos);
  CHECK(r.note.find("DFPes-L-") != std::string::npos);
}

TEST_CASE("report JSON") {
  const auto r = dfpes_formula::success(identity_formula_operator(), models(parse_formula("p"), kBirds),
                                        parse_formula("p"));
  const Json j = to_json(r);
  CHECK(j.at("id") == "DFPes-L-6");
  CHECK(j.at("status") == "violated");
  CHECK(j.at("witness").at("inputs").at("phi") == "p");
  CHECK(j.at("witness").at("instance").contains("lhs"));
  CHECK_FALSE(to_json(dfpes_formula::success(trivial_formula_operator(), models(parse_formula("p"), kBirds),
                                             parse_formula("p")))
                  .contains("witness"));
}

// }}}
