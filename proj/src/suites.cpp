#include "oblivion/suites.hpp"

#include <map>

#include "oblivion/error.hpp"
#include "oblivion/forgetting.hpp"
#include "oblivion/random.hpp"

namespace oblivion {

std::uint64_t SuiteReport::violations() const {
  std::uint64_t total = 0;
  for (const auto& t : tallies) total += t.violated;
  return total;
}

Json to_json(const SuiteReport& report) {
  Json out;
  out["suite"] = report.suite;
  out["operator"] = report.operator_name;
  out["mode"] = report.options.mode == SuiteMode::Exhaustive ? "exhaustive" : "random";
  out["basis"] = report.basis();
  out["atoms"] = report.options.atoms;
  if (report.options.mode == SuiteMode::Random) {
    out["count"] = report.options.count;
    out["seed"] = report.options.seed;
  }
  out["instances"] = report.instances;
  out["violations"] = report.violations();
  Json tallies = Json::array();
  for (const auto& t : report.tallies) {
    Json entry;
    entry["id"] = t.id;
    entry["checked"] = t.checked;
    entry["violated"] = t.violated;
    entry["vacuous"] = t.vacuous;
    tallies.push_back(std::move(entry));
  }
  out["postulates"] = std::move(tallies);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  out["witnesses"] = std::move(witnesses);
  return out;
}

namespace {

constexpr std::size_t kMaxWitnesses = 5;

// Accumulates instance reports into per-postulate tallies, keeping the
// order in which postulate ids were first declared.
class Tally {
 public:
  Tally(SuiteReport& report, std::vector<std::string> ids) : report_(report) {
    for (auto& id : ids) {
      index_[id] = report_.tallies.size();
      report_.tallies.push_back({std::move(id), 0, 0, 0});
    }
  }

  void Add(const PostulateReport& r) {
    auto& t = report_.tallies.at(index_.at(r.id));
    ++t.checked;
    if (r.violated()) {
      ++t.violated;
      if (report_.witnesses.size() < kMaxWitnesses) report_.witnesses.push_back(r);
    } else if (r.note.rfind("vacuous", 0) == 0) {
      ++t.vacuous;
    }
  }

  void AddAll(const std::vector<PostulateReport>& rs) {
    for (const auto& r : rs) Add(r);
  }

  // For checks that are plain equalities rather than postulate reports.
  void Expect(const std::string& id, bool ok, const std::function<Json()>& witness) {
    PostulateReport r{id, ok ? Status::Holds : Status::Violated, {}, Json()};
    if (!ok) {
      r.witness["postulate"] = id;
      r.witness["inputs"] = witness();
    }
    Add(r);
  }

 private:
  SuiteReport& report_;
  std::map<std::string, std::size_t> index_;
};

void RequireAtoms(const SuiteOptions& options, std::size_t exhaustive_cap, const char* suite) {
  if (options.atoms > Signature::kMaxAtoms) {
    throw CapExceededError(std::string(suite) + ": signature cap is " +
                           std::to_string(Signature::kMaxAtoms) + " atoms");
  }
  if (options.mode == SuiteMode::Exhaustive && options.atoms > exhaustive_cap) {
    throw CapExceededError(std::string(suite) + ": exhaustive runs are limited to " +
                           std::to_string(exhaustive_cap) + " atoms, got " +
                           std::to_string(options.atoms));
  }
  if (options.mode == SuiteMode::Random && options.max_rank < 0) {
    throw Error(std::string(suite) + ": max rank must be non-negative");
  }
}

// p, q, r, ... then a0, a1, ... if more are needed.
Signature StandardSignature(std::size_t atoms) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) {
    names.push_back(i < std::size(kNames) ? kNames[i] : "a" + std::to_string(i));
  }
  return Signature(std::move(names));
}

KnowledgeBase RandomKb(Rng& rng, const Signature& sig) {
  std::vector<Formula> formulas;
  const auto n = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < n; ++i) formulas.push_back(random_formula(rng, sig, 3));
  return KnowledgeBase(sig, std::move(formulas));
}

std::vector<Ocf> ZeroOneOcfs(const Signature& sig) {
  std::vector<Ocf> out;
  for (const auto& bs : all_belief_states(sig, true)) out.push_back(ocf_from_beliefs(bs));
  return out;
}

}  // namespace

// {{{ dfp

SuiteReport run_dfp_suite(const SuiteOptions& options) {
  RequireAtoms(options, 3, "dfp");
  SuiteReport report{"dfp", "delgrande", options, 0, {}, {}};
  Tally tally(report, {"DFP-1", "DFP-2", "DFP-3", "DFP-4", "DFP-5", "DFP-6", "DFP-7"});
  const Signature sig = StandardSignature(options.atoms);

  if (options.mode == SuiteMode::Random) {
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < options.count; ++i) {
      const KnowledgeBase kb = RandomKb(rng, sig);
      const KnowledgeBase kb2 = RandomKb(rng, sig);
      const Signature p = random_subsignature(rng, sig);
      const Signature p2 = random_subsignature(rng, sig);
      tally.AddAll(check_dfp(kb, kb2, p, p2));
      ++report.instances;
    }
    return report;
  }

  const auto gammas = all_belief_states(sig, false);
  const auto subsets = sig.subsets();
  tally.Add(dfp::deductive_closure());
  for (const auto& g : gammas) {
    for (const auto& p : subsets) {
      tally.Add(dfp::monotony(g, p));
      tally.Add(dfp::repeated(g, p));
      tally.Add(dfp::original_language(g, p));
      for (const auto& p2 : subsets) {
        tally.Add(dfp::intersection(g, p, p2));
        tally.Add(dfp::iterated(g, p, p2));
      }
      for (const auto& g2 : gammas) tally.Add(dfp::entailment(g, g2, p));
      ++report.instances;
    }
  }
  return report;
}

// }}}

// {{{ dfpes-sig

SuiteReport run_dfpes_signature_suite(const SignatureForgetOperator& op, const SuiteOptions& options) {
  RequireAtoms(options, 3, "dfpes-sig");
  SuiteReport report{"dfpes-sig", op.name, options, 0, {}, {}};
  Tally tally(report, {"DFPes-1", "DFPes-2", "DFPes-3", "DFPes-4", "DFPes-5", "DFPes-6",
                       "most-specific"});
  const Signature sig = StandardSignature(options.atoms);

  if (options.mode == SuiteMode::Random) {
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < options.count; ++i) {
      const Ocf k1 = random_ocf(rng, sig, options.max_rank);
      const Ocf k2 = random_ocf(rng, sig, options.max_rank);
      const Signature p = random_subsignature(rng, sig);
      const Signature p1 = random_subsignature(rng, sig);
      const Signature p2 = random_subsignature(rng, sig);
      tally.AddAll(check_dfpes_signature(op, k1, k2, p, p1, p2));
      tally.Add(check_most_specific(op, k1, p));
      ++report.instances;
    }
    return report;
  }

  const auto kappas = ZeroOneOcfs(sig);
  const auto subsets = sig.subsets();
  for (const auto& k : kappas) {
    for (const auto& p : subsets) {
      tally.Add(dfpes_signature::monotony(op, k, p));
      tally.Add(dfpes_signature::repeated(op, k, p));
      tally.Add(dfpes_signature::lifting(op, k, p));
      tally.Add(check_most_specific(op, k, p));
      for (const auto& p2 : subsets) {
        tally.Add(dfpes_signature::intersection(op, k, p, p2));
        tally.Add(dfpes_signature::iterated(op, k, p, p2));
      }
      for (const auto& k2 : kappas) tally.Add(dfpes_signature::entailment(op, k, k2, p));
      ++report.instances;
    }
  }
  return report;
}

// }}}

// {{{ dfpes-formula

SuiteReport run_dfpes_formula_suite(const FormulaForgetOperator& op, const SuiteOptions& options) {
  RequireAtoms(options, 2, "dfpes-formula");
  SuiteReport report{"dfpes-formula", op.name, options, 0, {}, {}};
  Tally tally(report, {"DFPes-L-1", "DFPes-L-2", "DFPes-L-3", "DFPes-L-4", "DFPes-L-5", "DFPes-L-6"});
  const Signature sig = StandardSignature(options.atoms);

  if (options.mode == SuiteMode::Random) {
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < options.count; ++i) {
      const BeliefState s1 = random_belief_state(rng, sig, true);
      const BeliefState s2 = random_belief_state(rng, sig, true);
      const Formula phi = random_formula(rng, sig, 3);
      const Formula psi = random_formula(rng, sig, 3);
      tally.AddAll(check_dfpes_formula(op, s1, s2, phi, psi));
      ++report.instances;
    }
    return report;
  }

  const auto states = all_belief_states(sig, true);
  std::vector<Formula> formulas;
  for (const auto& bs : all_belief_states(sig, false)) formulas.push_back(canonical_formula(bs));
  for (const auto& s : states) {
    for (const auto& f : formulas) {
      tally.Add(dfpes_formula::monotony(op, s, f));
      tally.Add(dfpes_formula::success(op, s, f));
      for (const auto& s2 : states) tally.Add(dfpes_formula::entailment(op, s, s2, f));
      for (const auto& g : formulas) {
        tally.Add(dfpes_formula::repeated(op, s, f, g));
        tally.Add(dfpes_formula::disjunction(op, s, f, g));
        tally.Add(dfpes_formula::iterated(op, s, f, g));
      }
      ++report.instances;
    }
  }
  return report;
}

// }}}

// {{{ ocf-props

namespace {

void CheckOcfProperties(Tally& tally, const Ocf& k, const Signature& sub, const Signature& subsub,
                        const std::vector<Formula>& sub_formulas) {
  const Ocf marginal = marginalise(k, sub);
  const BeliefState prior = beliefs(k);
  auto inputs = [&] {
    Json in;
    in["kappa"] = to_json(k);
    in["sub"] = to_json(sub);
    in["subsub"] = to_json(subsub);
    return in;
  };

  // Bel(κ|Σ') = Bel(κ) ∩ L_Σ' and ⟦κ|Σ'⟧ = ⟦κ⟧|Σ' share the model-level form.
  const bool reduced = beliefs(marginal) == reduce_worlds(prior, sub);
  tally.Expect("belief-restriction", reduced, inputs);
  tally.Expect("marginal-models", reduced, inputs);

  for (const auto& phi : sub_formulas) {
    tally.Expect("marginal-belief-equivalence", believes(marginal, phi) == believes(k, phi), [&] {
      Json in = inputs();
      in["phi"] = render_formula(phi);
      return in;
    });
  }

  // Lifting κ' = κ|Σ' back to Σ.
  const Ocf lifted = lift(marginal, k.signature());
  const BeliefState expanded = expand_worlds(beliefs(marginal), k.signature());
  tally.Expect("lifted-models", beliefs(lifted) == expanded, inputs);
  tally.Expect("lifted-beliefs", beliefs(lifted).codes() == expanded.codes(), inputs);
  tally.Expect("lift-marginalise-recovery", marginalise(lifted, sub) == marginal, inputs);

  tally.Expect("marginal-composition", marginalise(marginal, subsub) == marginalise(k, subsub), inputs);
}

std::vector<Formula> CanonicalFormulas(const Signature& sig) {
  std::vector<Formula> out;
  for (const auto& bs : all_belief_states(sig, false)) out.push_back(canonical_formula(bs));
  return out;
}

// Every normalized ranking over `sig` with ranks in [0, max_rank].
std::vector<Ocf> AllOcfs(const Signature& sig, std::int64_t max_rank) {
  std::vector<Ocf> out;
  const std::size_t n = sig.world_count();
  std::vector<std::int64_t> ranks(n, 0);
  for (;;) {
    if (std::find(ranks.begin(), ranks.end(), 0) != ranks.end()) out.emplace_back(sig, ranks);
    std::size_t i = 0;
    while (i < n && ranks[i] == max_rank) ranks[i++] = 0;
    if (i == n) break;
    ++ranks[i];
  }
  return out;
}

}  // namespace

SuiteReport run_ocf_property_suite(const SuiteOptions& options) {
  RequireAtoms(options, 3, "ocf-props");
  SuiteReport report{"ocf-props", "marginalisation", options, 0, {}, {}};
  Tally tally(report, {"marginal-belief-equivalence", "belief-restriction", "marginal-models",
                       "lifted-models", "lifted-beliefs", "lift-marginalise-recovery",
                       "marginal-composition"});

  if (options.mode == SuiteMode::Random) {
    const Signature sig = StandardSignature(options.atoms);
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < options.count; ++i) {
      const Ocf k = random_ocf(rng, sig, options.max_rank);
      const Signature sub = random_subsignature(rng, sig);
      const Signature subsub = random_subsignature(rng, sub);
      const Formula phi = random_formula(rng, sub, 3);
      CheckOcfProperties(tally, k, sub, subsub, {phi});
      ++report.instances;
    }
    return report;
  }

  // Every signature size up to the requested one: 0/1 rankings for all
  // zero-sets, plus every ranking with ranks 0..2 up to two atoms.
  for (std::size_t n = 0; n <= options.atoms; ++n) {
    const Signature sig = StandardSignature(n);
    std::vector<Ocf> kappas = n <= 2 ? AllOcfs(sig, 2) : ZeroOneOcfs(sig);
    const auto subsets = sig.subsets();
    std::vector<std::vector<Formula>> formulas;
    for (const auto& sub : subsets) formulas.push_back(CanonicalFormulas(sub));
    for (const auto& k : kappas) {
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (const auto& subsub : subsets[i].subsets()) {
          CheckOcfProperties(tally, k, subsets[i], subsub,
                             subsub == Signature() ? formulas[i] : std::vector<Formula>{});
          ++report.instances;
        }
      }
    }
  }
  return report;
}

// }}}

// {{{ bridge

SuiteReport run_bridge_suite(const SuiteOptions& options) {
  RequireAtoms(options, 3, "bridge");
  SuiteReport report{"bridge", "marginalisation", options, 0, {}, {}};
  Tally tally(report, {"forget-vs-marginal", "forget-vs-marginal-higher-ranks", "boole-vs-forget",
                       "boole-vs-marginal"});
  const Signature sig = StandardSignature(options.atoms);
  Rng rng(options.seed);

  auto check_state = [&](const BeliefState& m, const Signature& p) {
    const Signature rest = sig.minus(p);
    const BeliefState forgotten = forget_reduced(m, p);
    auto inputs = [&] {
      Json in;
      in["models"] = to_json(m);
      in["P"] = to_json(p);
      return in;
    };
    tally.Expect("forget-vs-marginal", forgotten == beliefs(marginalise(ocf_from_beliefs(m), rest)),
                 inputs);
    // Same zero-set, other ranks drawn from [1, max_rank].
    std::vector<std::int64_t> ranks(sig.world_count());
    for (WorldCode c = 0; c < ranks.size(); ++c) {
      ranks[c] = m.contains(c) ? 0
                               : 1 + static_cast<std::int64_t>(rng.below(
                                         static_cast<std::uint64_t>(std::max<std::int64_t>(options.max_rank, 1))));
    }
    tally.Expect("forget-vs-marginal-higher-ranks",
                 forgotten == beliefs(marginalise(Ocf(sig, ranks), rest)), inputs);
  };

  auto check_formula = [&](const Formula& phi) {
    const BeliefState m = models(phi, sig);
    for (const auto& atom : sig.atoms()) {
      auto inputs = [&] {
        Json in;
        in["phi"] = render_formula(phi);
        in["atom"] = atom;
        return in;
      };
      tally.Expect("boole-vs-forget", check_boole_equivalence(phi, atom, sig), inputs);
      // No OCF believes an inconsistent formula.
      if (!m.consistent()) continue;
      const BeliefState boole = models(boole_forget(phi, atom), sig);
      const Ocf k = ocf_from_beliefs(m);
      const BeliefState marginal =
          expand_worlds(beliefs(marginalise(k, sig.minus(Signature({atom})))), sig);
      tally.Expect("boole-vs-marginal", boole == marginal, inputs);
    }
  };

  if (options.mode == SuiteMode::Random) {
    for (std::uint64_t i = 0; i < options.count; ++i) {
      check_state(random_belief_state(rng, sig, true), random_subsignature(rng, sig));
      check_formula(random_formula(rng, sig, 4));
      ++report.instances;
    }
    return report;
  }

  const auto subsets = sig.subsets();
  for (const auto& m : all_belief_states(sig, true)) {
    for (const auto& p : subsets) {
      check_state(m, p);
      ++report.instances;
    }
  }
  for (const auto& m : all_belief_states(sig, false)) {
    check_formula(canonical_formula(m));
    ++report.instances;
  }
  return report;
}

// }}}

}  // namespace oblivion
