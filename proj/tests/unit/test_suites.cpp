#include <doctest.h>

#include "oblivion/error.hpp"
#include "oblivion/suites.hpp"

using namespace oblivion;

namespace {

SuiteOptions Exhaustive(std::size_t atoms) {
  SuiteOptions o;
  o.atoms = atoms;
  return o;
}

SuiteOptions Random(std::size_t atoms, std::uint64_t count, std::uint64_t seed) {
  SuiteOptions o;
  o.mode = SuiteMode::Random;
  o.atoms = atoms;
  o.count = count;
  o.seed = seed;
  return o;
}

const PostulateTally& Tally(const SuiteReport& r, const std::string& id) {
  for (const auto& t : r.tallies) {
    if (t.id == id) return t;
  }
  FAIL("no tally " << id);
  return r.tallies.front();
}

}  // namespace

TEST_CASE("dfp exhaustive counts") {
  const SuiteReport r = run_dfp_suite(Exhaustive(2));
  CHECK(r.violations() == 0);
  CHECK(r.basis() == "exhaustive");
  // 16 states × 4 subsets, times 16 partners or 4 second subsets.
  CHECK(Tally(r, "DFP-1").checked == 64);
  CHECK(Tally(r, "DFP-2").checked == 64 * 16);
  CHECK(Tally(r, "DFP-3").checked == 1);
  CHECK(Tally(r, "DFP-5").checked == 64 * 4);
}

TEST_CASE("dfpes-sig exhaustive at three atoms") {
  const SuiteReport r = run_dfpes_signature_suite(marginalisation_operator(), Exhaustive(3));
  CHECK(r.violations() == 0);
  CHECK(Tally(r, "DFPes-1").checked == 255 * 8);
  CHECK(Tally(r, "DFPes-2").checked == 255 * 255 * 8);
  CHECK(Tally(r, "DFPes-4").checked == 255 * 64);
}

TEST_CASE("dfpes-formula separates operators") {
  CHECK(run_dfpes_formula_suite(trivial_formula_operator(), Exhaustive(2)).violations() == 0);
  const SuiteReport id = run_dfpes_formula_suite(identity_formula_operator(), Exhaustive(2));
  CHECK(Tally(id, "DFPes-L-6").violated > 0);
  CHECK(Tally(id, "DFPes-L-1").violated == 0);
  REQUIRE_FALSE(id.witnesses.empty());
  CHECK(id.witnesses.size() <= 5);
  const SuiteReport fm = run_dfpes_formula_suite(full_meet_contraction_operator(), Exhaustive(2));
  CHECK(fm.violations() > 0);
}

TEST_CASE("ocf-props and bridge hold") {
  CHECK(run_ocf_property_suite(Exhaustive(3)).violations() == 0);
  CHECK(run_ocf_property_suite(Random(4, 500, 3)).violations() == 0);
  const SuiteReport b = run_bridge_suite(Exhaustive(3));
  CHECK(b.violations() == 0);
  CHECK(Tally(b, "forget-vs-marginal").checked == 2040);
  CHECK(Tally(b, "boole-vs-forget").checked == 256 * 3);
  CHECK(Tally(b, "boole-vs-marginal").checked == 255 * 3);
}

TEST_CASE("random suites are deterministic per seed") {
  auto dump = [](const SuiteReport& r) { return to_json(r).dump(); };
  CHECK(dump(run_dfp_suite(Random(3, 100, 42))) == dump(run_dfp_suite(Random(3, 100, 42))));
  const auto a = dump(run_dfpes_formula_suite(identity_formula_operator(), Random(3, 100, 1)));
  CHECK(a == dump(run_dfpes_formula_suite(identity_formula_operator(), Random(3, 100, 1))));
  CHECK(a != dump(run_dfpes_formula_suite(identity_formula_operator(), Random(3, 100, 2))));
}

TEST_CASE("suite JSON") {
  const Json j = to_json(run_dfp_suite(Random(3, 10, 9)));
  CHECK(j.at("suite") == "dfp");
  CHECK(j.at("basis") == "sampled");
  CHECK(j.at("seed") == 9);
  CHECK(j.at("instances") == 10);
  CHECK(j.at("postulates").size() == 7);
  CHECK_FALSE(to_json(run_dfp_suite(Exhaustive(1))).contains("seed"));
}

TEST_CASE("exhaustive caps") {
  CHECK_THROWS_AS(run_dfp_suite(Exhaustive(4)), CapExceededError);
  CHECK_THROWS_AS(run_dfpes_formula_suite(trivial_formula_operator(), Exhaustive(3)), CapExceededError);
  CHECK_NOTHROW(run_dfp_suite(Random(6, 5, 0)));
}
