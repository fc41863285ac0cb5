#include "oblivion/postulates.hpp"

#include "oblivion/error.hpp"
#include "oblivion/forgetting.hpp"
#include "oblivion/random.hpp"

namespace oblivion {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Holds: return "holds";
    case Status::Violated: return "violated";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

Json to_json(const PostulateReport& report) {
  Json out;
  out["id"] = report.id;
  out["status"] = std::string(to_string(report.status));
  if (!report.note.empty()) out["note"] = report.note;
  if (report.violated()) out["witness"] = report.witness;
  return out;
}

// {{{ Operators

SignatureForgetOperator marginalisation_operator() {
  return {"marginalisation",
          [](const Ocf& k, const Signature& p) { return marginalise(k, k.signature().minus(p)); }};
}

SignatureForgetOperator belief_erasing_operator() {
  return {"belief-erasing",
          [](const Ocf& k, const Signature& p) { return Ocf::uniform(k.signature().minus(p)); }};
}

FormulaForgetOperator trivial_formula_operator() {
  return {"trivial", [](const BeliefState& s, const Formula&) {
            return BeliefState::all_worlds(s.signature());
          }};
}

FormulaForgetOperator identity_formula_operator() {
  return {"identity", [](const BeliefState& s, const Formula&) { return s; }};
}

FormulaForgetOperator full_meet_contraction_operator() {
  return {"full-meet", [](const BeliefState& s, const Formula& phi) {
            const BeliefState phi_models = models(phi, s.signature());
            if (phi_models.is_all_worlds() || !s.is_subset_of(phi_models)) return s;
            return united(s, models(Formula::Not(phi), s.signature()));
          }};
}

// }}}

namespace {

constexpr const char* kVacuous = "vacuous: premise is false";

PostulateReport Holds(std::string id, std::string note = {}) {
  return PostulateReport{std::move(id), Status::Holds, std::move(note), Json()};
}

PostulateReport Violated(std::string id, const std::string& op_name, Json inputs, Json instance) {
  Json witness;
  witness["postulate"] = id;
  witness["operator"] = op_name;
  witness["inputs"] = std::move(inputs);
  witness["instance"] = std::move(instance);
  return PostulateReport{std::move(id), Status::Violated, {}, std::move(witness)};
}

Json Sides(const BeliefState& lhs, const BeliefState& rhs) {
  Json out;
  out["lhs"] = to_json(lhs);
  out["rhs"] = to_json(rhs);
  return out;
}

// Folds instance reports of one postulate: the first violation wins; a
// postulate whose every instance was vacuous says so.
PostulateReport Merge(const std::string& id, const std::vector<PostulateReport>& parts,
                      const Json& full_inputs) {
  bool all_vacuous = !parts.empty();
  for (const auto& part : parts) {
    if (part.violated()) {
      PostulateReport out = part;
      out.witness["inputs"] = full_inputs;
      return out;
    }
    if (part.note != kVacuous) all_vacuous = false;
  }
  return Holds(id, all_vacuous ? kVacuous : "");
}

Json FormulaList(const std::vector<Formula>& formulas) {
  Json out = Json::array();
  for (const auto& f : formulas) out.push_back(render_formula(f));
  return out;
}

}  // namespace

// {{{ DFP-1..7

namespace {

constexpr const char* kDfpOperator = "delgrande";

Json DfpInputs(const Signature& sig, const Json& kb, const Json& kb2, const Signature& p,
               const Signature& p2) {
  Json in;
  in["signature"] = to_json(sig);
  in["kb"] = kb;
  in["kb2"] = kb2;
  in["P"] = to_json(p);
  in["P2"] = to_json(p2);
  return in;
}

Json CanonicalKb(const BeliefState& gamma) {
  return FormulaList({canonical_formula(gamma)});
}

Json DfpInputs(const BeliefState& g1, const BeliefState& g2, const Signature& p,
               const Signature& p2) {
  return DfpInputs(g1.signature(), CanonicalKb(g1), CanonicalKb(g2), p, p2);
}

}  // namespace

namespace dfp {

PostulateReport monotony(const BeliefState& gamma, const Signature& p) {
  const BeliefState forgotten = forget_original(gamma, p);
  if (gamma.is_subset_of(forgotten)) return Holds("DFP-1");
  Json instance = Sides(gamma, forgotten);
  instance["P"] = to_json(p);
  return Violated("DFP-1", kDfpOperator, DfpInputs(gamma, gamma, p, Signature()), std::move(instance));
}

PostulateReport entailment(const BeliefState& gamma, const BeliefState& gamma2, const Signature& p) {
  if (!gamma.is_subset_of(gamma2)) return Holds("DFP-2", kVacuous);
  const BeliefState lhs = forget_reduced(gamma, p);
  const BeliefState rhs = forget_reduced(gamma2, p);
  if (lhs.is_subset_of(rhs)) return Holds("DFP-2");
  Json instance = Sides(lhs, rhs);
  instance["P"] = to_json(p);
  return Violated("DFP-2", kDfpOperator, DfpInputs(gamma, gamma2, p, Signature()), std::move(instance));
}

PostulateReport deductive_closure() {
  return Holds("DFP-3", "holds by construction: belief states are model sets, hence deductively closed");
}

PostulateReport repeated(const BeliefState& gamma, const Signature& p) {
  const BeliefState rhs = forget_reduced(gamma, p);
  for (const Signature& inner : p.intersected(gamma.signature()).subsets()) {
    const BeliefState lhs = forget_reduced(forget_reduced(gamma, inner), p);
    if (lhs != rhs) {
      Json instance = Sides(lhs, rhs);
      instance["P"] = to_json(p);
      instance["P'"] = to_json(inner);
      return Violated("DFP-4", kDfpOperator, DfpInputs(gamma, gamma, p, Signature()),
                      std::move(instance));
    }
  }
  return Holds("DFP-4");
}

PostulateReport intersection(const BeliefState& gamma, const Signature& p, const Signature& p2) {
  const Signature both = p.united(p2);
  const Signature rest = gamma.signature().minus(both);
  const BeliefState lhs = forget_reduced(gamma, both);
  // Th(A) ∩ Th(B) restricted to L_rest has the union of the reduced model sets.
  const BeliefState rhs = united(reduce_worlds(forget_reduced(gamma, p), rest),
                                 reduce_worlds(forget_reduced(gamma, p2), rest));
  if (lhs == rhs) return Holds("DFP-5");
  Json instance = Sides(lhs, rhs);
  instance["P"] = to_json(p);
  instance["P2"] = to_json(p2);
  return Violated("DFP-5", kDfpOperator, DfpInputs(gamma, gamma, p, p2), std::move(instance));
}

PostulateReport iterated(const BeliefState& gamma, const Signature& p, const Signature& p2) {
  const BeliefState lhs = forget_reduced(gamma, p.united(p2));
  const BeliefState rhs = forget_reduced(forget_reduced(gamma, p), p2);
  if (lhs == rhs) return Holds("DFP-6");
  Json instance = Sides(lhs, rhs);
  instance["P"] = to_json(p);
  instance["P2"] = to_json(p2);
  return Violated("DFP-6", kDfpOperator, DfpInputs(gamma, gamma, p, p2), std::move(instance));
}

PostulateReport original_language(const BeliefState& gamma, const Signature& p) {
  const BeliefState lhs = forget_reduced(gamma, p);
  const BeliefState rhs = reduce_worlds(forget_original(gamma, p), gamma.signature().minus(p));
  if (lhs == rhs) return Holds("DFP-7");
  Json instance = Sides(lhs, rhs);
  instance["P"] = to_json(p);
  return Violated("DFP-7", kDfpOperator, DfpInputs(gamma, gamma, p, Signature()), std::move(instance));
}

}  // namespace dfp

namespace {

std::vector<PostulateReport> CheckDfp(const BeliefState& g1, const BeliefState& g2,
                                      const Signature& p, const Signature& p2, const Json& inputs) {
  require_same_signature(g1.signature(), g2.signature(), "DFP check");
  const BeliefState* gammas[] = {&g1, &g2};
  const Signature* sigs[] = {&p, &p2};
  std::vector<PostulateReport> d1, d2, d4, d5, d6, d7;
  for (const BeliefState* g : gammas) {
    for (const Signature* q : sigs) {
      d1.push_back(dfp::monotony(*g, *q));
      d4.push_back(dfp::repeated(*g, *q));
      d7.push_back(dfp::original_language(*g, *q));
    }
    d5.push_back(dfp::intersection(*g, p, p2));
    d6.push_back(dfp::iterated(*g, p, p2));
    d6.push_back(dfp::iterated(*g, p2, p));
  }
  for (const Signature* q : sigs) {
    d2.push_back(dfp::entailment(g1, g2, *q));
    d2.push_back(dfp::entailment(g2, g1, *q));
  }
  return {Merge("DFP-1", d1, inputs), Merge("DFP-2", d2, inputs), dfp::deductive_closure(),
          Merge("DFP-4", d4, inputs), Merge("DFP-5", d5, inputs), Merge("DFP-6", d6, inputs),
          Merge("DFP-7", d7, inputs)};
}

}  // namespace

std::vector<PostulateReport> check_dfp(const BeliefState& gamma, const BeliefState& gamma2,
                                       const Signature& p, const Signature& p2) {
  return CheckDfp(gamma, gamma2, p, p2, DfpInputs(gamma, gamma2, p, p2));
}

std::vector<PostulateReport> check_dfp(const KnowledgeBase& kb, const KnowledgeBase& kb2,
                                       const Signature& p, const Signature& p2) {
  require_same_signature(kb.signature(), kb2.signature(), "DFP check");
  return CheckDfp(kb.models(), kb2.models(), p, p2,
                  DfpInputs(kb.signature(), FormulaList(kb.formulas()), FormulaList(kb2.formulas()),
                            p, p2));
}

std::vector<PostulateReport> replay_dfp(const Json& witness) {
  const Json& in = witness.at("inputs");
  const Signature sig = signature_from_json(in.at("signature"));
  auto kb = [&](const Json& list) {
    std::vector<Formula> formulas;
    for (const auto& text : list) formulas.push_back(parse_formula(text.get<std::string>()));
    return KnowledgeBase(sig, std::move(formulas));
  };
  return check_dfp(kb(in.at("kb")), kb(in.at("kb2")), signature_from_json(in.at("P")),
                   signature_from_json(in.at("P2")));
}

// }}}

// {{{ DFPes-1..6

namespace {

Ocf ApplySignatureOp(const SignatureForgetOperator& op, const Ocf& k, const Signature& p) {
  Ocf out = op.apply(k, p);
  const Signature expected = k.signature().minus(p);
  if (out.signature() != expected) {
    throw SignatureMismatchError("operator '" + op.name + "' returned an OCF over " +
                                 out.signature().to_string() + ", expected " + expected.to_string());
  }
  return out;
}

Json SigInputs(const Ocf& k1, const Ocf& k2, const Signature& p, const Signature& p1,
               const Signature& p2) {
  Json in;
  in["k1"] = to_json(k1);
  in["k2"] = to_json(k2);
  in["P"] = to_json(p);
  in["P1"] = to_json(p1);
  in["P2"] = to_json(p2);
  return in;
}

}  // namespace

namespace dfpes_signature {

PostulateReport monotony(const SignatureForgetOperator& op, const Ocf& k, const Signature& p) {
  const BeliefState prior = beliefs(k);
  const BeliefState posterior = expand_worlds(beliefs(ApplySignatureOp(op, k, p)), k.signature());
  if (prior.is_subset_of(posterior)) return Holds("DFPes-1");
  Json instance = Sides(prior, posterior);
  instance["P"] = to_json(p);
  return Violated("DFPes-1", op.name, SigInputs(k, k, p, {}, {}), std::move(instance));
}

PostulateReport entailment(const SignatureForgetOperator& op, const Ocf& k1, const Ocf& k2,
                           const Signature& p) {
  if (!beliefs(k1).is_subset_of(beliefs(k2))) return Holds("DFPes-2", kVacuous);
  const BeliefState lhs = beliefs(ApplySignatureOp(op, k1, p));
  const BeliefState rhs = beliefs(ApplySignatureOp(op, k2, p));
  if (lhs.is_subset_of(rhs)) return Holds("DFPes-2");
  Json instance = Sides(lhs, rhs);
  instance["P"] = to_json(p);
  return Violated("DFPes-2", op.name, SigInputs(k1, k2, p, {}, {}), std::move(instance));
}

PostulateReport repeated(const SignatureForgetOperator& op, const Ocf& k, const Signature& p) {
  const BeliefState rhs = beliefs(ApplySignatureOp(op, k, p));
  for (const Signature& inner : p.intersected(k.signature()).subsets()) {
    const BeliefState lhs = beliefs(ApplySignatureOp(op, ApplySignatureOp(op, k, inner), p));
    if (lhs != rhs) {
      Json instance = Sides(lhs, rhs);
      instance["P"] = to_json(p);
      instance["P'"] = to_json(inner);
      return Violated("DFPes-3", op.name, SigInputs(k, k, p, {}, {}), std::move(instance));
    }
  }
  return Holds("DFPes-3");
}

PostulateReport intersection(const SignatureForgetOperator& op, const Ocf& k, const Signature& p1,
                             const Signature& p2) {
  const Signature both = p1.united(p2);
  const Signature rest = k.signature().minus(both);
  const BeliefState lhs = beliefs(ApplySignatureOp(op, k, both));
  const BeliefState rhs = united(reduce_worlds(beliefs(ApplySignatureOp(op, k, p1)), rest),
                                 reduce_worlds(beliefs(ApplySignatureOp(op, k, p2)), rest));
  if (lhs == rhs) return Holds("DFPes-4");
  Json instance = Sides(lhs, rhs);
  instance["P1"] = to_json(p1);
  instance["P2"] = to_json(p2);
  return Violated("DFPes-4", op.name, SigInputs(k, k, {}, p1, p2), std::move(instance));
}

PostulateReport iterated(const SignatureForgetOperator& op, const Ocf& k, const Signature& p1,
                         const Signature& p2) {
  const BeliefState lhs = beliefs(ApplySignatureOp(op, k, p1.united(p2)));
  const BeliefState rhs = beliefs(ApplySignatureOp(op, ApplySignatureOp(op, k, p1), p2));
  if (lhs == rhs) return Holds("DFPes-5");
  Json instance = Sides(lhs, rhs);
  instance["P1"] = to_json(p1);
  instance["P2"] = to_json(p2);
  return Violated("DFPes-5", op.name, SigInputs(k, k, {}, p1, p2), std::move(instance));
}

PostulateReport lifting(const SignatureForgetOperator& op, const Ocf& k, const Signature& p) {
  const Ocf forgotten = ApplySignatureOp(op, k, p);
  const BeliefState lhs = beliefs(forgotten);
  const BeliefState rhs = reduce_worlds(beliefs(lift(forgotten, k.signature())), forgotten.signature());
  if (lhs == rhs) return Holds("DFPes-6");
  Json instance = Sides(lhs, rhs);
  instance["P"] = to_json(p);
  return Violated("DFPes-6", op.name, SigInputs(k, k, p, {}, {}), std::move(instance));
}

}  // namespace dfpes_signature

std::vector<PostulateReport> check_dfpes_signature(const SignatureForgetOperator& op, const Ocf& k1,
                                                   const Ocf& k2, const Signature& p,
                                                   const Signature& p1, const Signature& p2) {
  require_same_signature(k1.signature(), k2.signature(), "DFPes check");
  const Json inputs = SigInputs(k1, k2, p, p1, p2);
  std::vector<PostulateReport> r1, r2, r3, r4, r5, r6;
  for (const Ocf* k : {&k1, &k2}) {
    r1.push_back(dfpes_signature::monotony(op, *k, p));
    r3.push_back(dfpes_signature::repeated(op, *k, p));
    r4.push_back(dfpes_signature::intersection(op, *k, p1, p2));
    r5.push_back(dfpes_signature::iterated(op, *k, p1, p2));
    r6.push_back(dfpes_signature::lifting(op, *k, p));
  }
  r2.push_back(dfpes_signature::entailment(op, k1, k2, p));
  r2.push_back(dfpes_signature::entailment(op, k2, k1, p));
  return {Merge("DFPes-1", r1, inputs), Merge("DFPes-2", r2, inputs), Merge("DFPes-3", r3, inputs),
          Merge("DFPes-4", r4, inputs), Merge("DFPes-5", r5, inputs), Merge("DFPes-6", r6, inputs)};
}

std::vector<PostulateReport> replay_dfpes_signature(const SignatureForgetOperator& op,
                                                    const Json& witness) {
  const Json& in = witness.at("inputs");
  return check_dfpes_signature(op, ocf_from_json(in.at("k1")), ocf_from_json(in.at("k2")),
                               signature_from_json(in.at("P")), signature_from_json(in.at("P1")),
                               signature_from_json(in.at("P2")));
}

PostulateReport check_most_specific(const SignatureForgetOperator& op, const Ocf& k,
                                    const Signature& p) {
  const BeliefState marginal = beliefs(marginalise(k, k.signature().minus(p)));
  const BeliefState other = beliefs(ApplySignatureOp(op, k, p));
  if (!marginal.is_subset_of(other)) {
    Json inputs;
    inputs["k"] = to_json(k);
    inputs["P"] = to_json(p);
    return Violated("most-specific", op.name, std::move(inputs), Sides(marginal, other));
  }
  return Holds("most-specific", marginal == other
                                    ? "equal: same beliefs as marginalisation"
                                    : "strict: marginalisation keeps strictly more beliefs");
}

// }}}

// {{{ DFPes-L-1..6

namespace {

BeliefState ApplyFormulaOp(const FormulaForgetOperator& op, const BeliefState& s, const Formula& f) {
  BeliefState out = op.apply(s, f);
  if (out.signature() != s.signature()) {
    throw SignatureMismatchError("operator '" + op.name + "' changed the signature from " +
                                 s.signature().to_string() + " to " + out.signature().to_string());
  }
  return out;
}

Json FormulaInputs(const BeliefState& s1, const BeliefState& s2, const Formula& phi,
                   const Formula& psi) {
  require_same_signature(s1.signature(), s2.signature(), "DFPes-L check");
  Json in;
  in["signature"] = to_json(s1.signature());
  in["s1"] = render_worlds(s1);
  in["s2"] = render_worlds(s2);
  in["phi"] = render_formula(phi);
  in["psi"] = render_formula(psi);
  return in;
}

Json FormulaInstance(const BeliefState& s, const BeliefState& lhs, const BeliefState& rhs) {
  Json out;
  out["state"] = render_worlds(s);
  out["lhs"] = render_worlds(lhs);
  out["rhs"] = render_worlds(rhs);
  return out;
}

}  // namespace

namespace dfpes_formula {

PostulateReport monotony(const FormulaForgetOperator& op, const BeliefState& s, const Formula& phi) {
  const BeliefState out = ApplyFormulaOp(op, s, phi);
  if (s.is_subset_of(out)) return Holds("DFPes-L-1");
  Json instance = FormulaInstance(s, s, out);
  instance["phi"] = render_formula(phi);
  return Violated("DFPes-L-1", op.name, FormulaInputs(s, s, phi, phi), std::move(instance));
}

PostulateReport entailment(const FormulaForgetOperator& op, const BeliefState& s1,
                           const BeliefState& s2, const Formula& phi) {
  if (!s1.is_subset_of(s2)) return Holds("DFPes-L-2", kVacuous);
  const BeliefState lhs = ApplyFormulaOp(op, s1, phi);
  const BeliefState rhs = ApplyFormulaOp(op, s2, phi);
  if (lhs.is_subset_of(rhs)) return Holds("DFPes-L-2");
  Json instance = FormulaInstance(s1, lhs, rhs);
  instance["other_state"] = render_worlds(s2);
  instance["phi"] = render_formula(phi);
  return Violated("DFPes-L-2", op.name, FormulaInputs(s1, s2, phi, phi), std::move(instance));
}

PostulateReport repeated(const FormulaForgetOperator& op, const BeliefState& s,
                         const Formula& specific, const Formula& general) {
  if (!models(specific, s.signature()).is_subset_of(models(general, s.signature()))) {
    return Holds("DFPes-L-3", kVacuous);
  }
  const BeliefState lhs = ApplyFormulaOp(op, s, specific);
  const BeliefState rhs = ApplyFormulaOp(op, ApplyFormulaOp(op, s, general), specific);
  if (lhs == rhs) return Holds("DFPes-L-3");
  Json instance = FormulaInstance(s, lhs, rhs);
  instance["phi"] = render_formula(specific);
  instance["psi"] = render_formula(general);
  return Violated("DFPes-L-3", op.name, FormulaInputs(s, s, specific, general), std::move(instance));
}

PostulateReport disjunction(const FormulaForgetOperator& op, const BeliefState& s,
                            const Formula& phi, const Formula& psi) {
  const BeliefState lhs = ApplyFormulaOp(op, s, Formula::Or(phi, psi));
  // Bel(A) ∩ Bel(B) over one signature has the union of the model sets.
  const BeliefState rhs = united(ApplyFormulaOp(op, s, phi), ApplyFormulaOp(op, s, psi));
  if (lhs == rhs) return Holds("DFPes-L-4");
  Json instance = FormulaInstance(s, lhs, rhs);
  instance["phi"] = render_formula(phi);
  instance["psi"] = render_formula(psi);
  return Violated("DFPes-L-4", op.name, FormulaInputs(s, s, phi, psi), std::move(instance));
}

PostulateReport iterated(const FormulaForgetOperator& op, const BeliefState& s, const Formula& phi,
                         const Formula& psi) {
  const BeliefState lhs = ApplyFormulaOp(op, s, Formula::Or(phi, psi));
  const BeliefState rhs = ApplyFormulaOp(op, ApplyFormulaOp(op, s, phi), psi);
  if (lhs == rhs) return Holds("DFPes-L-5");
  Json instance = FormulaInstance(s, lhs, rhs);
  instance["phi"] = render_formula(phi);
  instance["psi"] = render_formula(psi);
  return Violated("DFPes-L-5", op.name, FormulaInputs(s, s, phi, psi), std::move(instance));
}

PostulateReport success(const FormulaForgetOperator& op, const BeliefState& s, const Formula& phi) {
  const BeliefState phi_models = models(phi, s.signature());
  if (phi_models.is_all_worlds()) return Holds("DFPes-L-6", kVacuous);
  const BeliefState out = ApplyFormulaOp(op, s, phi);
  if (!out.is_subset_of(phi_models)) return Holds("DFPes-L-6");
  Json instance = FormulaInstance(s, out, phi_models);
  instance["phi"] = render_formula(phi);
  return Violated("DFPes-L-6", op.name, FormulaInputs(s, s, phi, phi), std::move(instance));
}

}  // namespace dfpes_formula

std::vector<PostulateReport> check_dfpes_formula(const FormulaForgetOperator& op,
                                                 const BeliefState& s1, const BeliefState& s2,
                                                 const Formula& phi, const Formula& psi) {
  const Json inputs = FormulaInputs(s1, s2, phi, psi);
  const Formula both = Formula::And(phi, psi);
  const Signature& sig = s1.signature();
  const bool phi_psi = models(phi, sig).is_subset_of(models(psi, sig));
  const bool psi_phi = models(psi, sig).is_subset_of(models(phi, sig));

  std::vector<PostulateReport> r1, r2, r3, r4, r5, r6;
  for (const BeliefState* s : {&s1, &s2}) {
    for (const Formula* f : {&phi, &psi}) {
      r1.push_back(dfpes_formula::monotony(op, *s, *f));
      r6.push_back(dfpes_formula::success(op, *s, *f));
    }
    if (phi_psi) r3.push_back(dfpes_formula::repeated(op, *s, phi, psi));
    if (psi_phi) r3.push_back(dfpes_formula::repeated(op, *s, psi, phi));
    r3.push_back(dfpes_formula::repeated(op, *s, both, phi));
    r3.push_back(dfpes_formula::repeated(op, *s, both, psi));
    r4.push_back(dfpes_formula::disjunction(op, *s, phi, psi));
    r4.push_back(dfpes_formula::disjunction(op, *s, psi, phi));
    r5.push_back(dfpes_formula::iterated(op, *s, phi, psi));
    r5.push_back(dfpes_formula::iterated(op, *s, psi, phi));
  }
  for (const Formula* f : {&phi, &psi}) {
    r2.push_back(dfpes_formula::entailment(op, s1, s2, *f));
    r2.push_back(dfpes_formula::entailment(op, s2, s1, *f));
  }
  return {Merge("DFPes-L-1", r1, inputs), Merge("DFPes-L-2", r2, inputs),
          Merge("DFPes-L-3", r3, inputs), Merge("DFPes-L-4", r4, inputs),
          Merge("DFPes-L-5", r5, inputs), Merge("DFPes-L-6", r6, inputs)};
}

std::vector<PostulateReport> replay_dfpes_formula(const FormulaForgetOperator& op,
                                                  const Json& witness) {
  const Json& in = witness.at("inputs");
  const Signature sig = signature_from_json(in.at("signature"));
  auto state = [&](const Json& list) {
    std::vector<World> worlds;
    for (const auto& w : list) worlds.push_back(parse_world(w.get<std::string>(), sig));
    return BeliefState(sig, worlds);
  };
  return check_dfpes_formula(op, state(in.at("s1")), state(in.at("s2")),
                             parse_formula(in.at("phi").get<std::string>()),
                             parse_formula(in.at("psi").get<std::string>()));
}

PostulateReport check_syntax_independence(const FormulaForgetOperator& op, const BeliefState& s,
                                          const Formula& phi, const Formula& psi) {
  if (models(phi, s.signature()) != models(psi, s.signature())) {
    return PostulateReport{"syntax-independence", Status::NotApplicable,
                           "formulas are not equivalent", Json()};
  }
  const BeliefState lhs = ApplyFormulaOp(op, s, phi);
  const BeliefState rhs = ApplyFormulaOp(op, s, psi);
  if (lhs == rhs) return Holds("syntax-independence");
  Json instance = FormulaInstance(s, lhs, rhs);
  instance["phi"] = render_formula(phi);
  instance["psi"] = render_formula(psi);
  return Violated("syntax-independence", op.name, FormulaInputs(s, s, phi, psi), std::move(instance));
}

ScreeningResult find_dfpes_formula_violation(const FormulaForgetOperator& op,
                                             const Signature& signature, std::size_t samples,
                                             std::uint64_t seed) {
  ScreeningResult result;
  if (signature.size() > 2) {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const BeliefState s1 = random_belief_state(rng, signature, true);
      const BeliefState s2 = random_belief_state(rng, signature, true);
      const Formula phi = canonical_formula(random_belief_state(rng, signature, false));
      const Formula psi = canonical_formula(random_belief_state(rng, signature, false));
      ++result.instances;
      for (auto& report : check_dfpes_formula(op, s1, s2, phi, psi)) {
        if (report.violated()) {
          result.violation = std::move(report);
          return result;
        }
      }
    }
    return result;
  }

  result.exhaustive = true;
  const auto states = all_belief_states(signature, true);
  std::vector<Formula> formulas;
  for (const auto& bs : all_belief_states(signature, false)) formulas.push_back(canonical_formula(bs));

  auto found = [&](PostulateReport report) {
    ++result.instances;
    if (!report.violated()) return false;
    result.violation = std::move(report);
    return true;
  };
  for (const auto& s : states) {
    for (const auto& f : formulas) {
      if (found(dfpes_formula::monotony(op, s, f))) return result;
      if (found(dfpes_formula::success(op, s, f))) return result;
    }
  }
  for (const auto& s1 : states) {
    for (const auto& s2 : states) {
      for (const auto& f : formulas) {
        if (found(dfpes_formula::entailment(op, s1, s2, f))) return result;
      }
    }
  }
  for (const auto& s : states) {
    for (const auto& f : formulas) {
      for (const auto& g : formulas) {
        if (found(dfpes_formula::repeated(op, s, f, g))) return result;
        if (found(dfpes_formula::disjunction(op, s, f, g))) return result;
        if (found(dfpes_formula::iterated(op, s, f, g))) return result;
      }
    }
  }
  return result;
}

PostulateReport check_conjunction_collapse(const FormulaForgetOperator& op, const BeliefState& s,
                                           const Formula& phi, const Formula& psi) {
  const ScreeningResult screen = find_dfpes_formula_violation(op, s.signature());
  if (screen.violation) {
    return PostulateReport{"conjunction-collapse", Status::NotApplicable,
                           "precondition failed: operator violates " + screen.violation->id,
                           Json()};
  }
  const BeliefState a = ApplyFormulaOp(op, s, phi);
  const BeliefState b = ApplyFormulaOp(op, s, Formula::And(phi, psi));
  const BeliefState c = ApplyFormulaOp(op, s, psi);
  const std::string basis = std::string("precondition screened ") +
                            (screen.exhaustive ? "exhaustively" : "by sampling") + " over " +
                            std::to_string(screen.instances) + " instances";
  if (a == b && b == c) return Holds("conjunction-collapse", basis);
  Json instance;
  instance["state"] = render_worlds(s);
  instance["phi"] = render_formula(phi);
  instance["psi"] = render_formula(psi);
  instance["forget_phi"] = render_worlds(a);
  instance["forget_conjunction"] = render_worlds(b);
  instance["forget_psi"] = render_worlds(c);
  PostulateReport out =
      Violated("conjunction-collapse", op.name, FormulaInputs(s, s, phi, psi), std::move(instance));
  out.note = basis;
  return out;
}

// }}}

}  // namespace oblivion
