#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "oblivion/census.hpp"
#include "oblivion/error.hpp"
#include "oblivion/forgetting.hpp"
#include "oblivion/reproduce.hpp"
#include "oblivion/suites.hpp"

#ifndef OBLIVION_DATA_DIR
#define OBLIVION_DATA_DIR "data"
#endif

namespace oblivion::cli {
namespace {

struct Config {
  std::string format = "table";
  bool json = false;

  // models / forget
  std::string kb_path;
  std::string atoms;
  bool original = false;

  // marginalise / lift
  std::string ocf_path;
  std::string keep;
  std::string to;

  // check
  std::string suite;
  std::optional<std::size_t> exhaustive;
  std::optional<std::uint64_t> random;
  std::uint64_t seed = 0;
  std::optional<std::size_t> suite_atoms;
  std::string op;

  // reproduce
  std::string table1_path = std::string(OBLIVION_DATA_DIR) + "/birds.kb";
  std::string table2_path = std::string(OBLIVION_DATA_DIR) + "/birds.ocf";

  // census
  std::size_t census_atoms = 1;

  // replay
  std::string witness_path;
};

// OBLIVION_MAX_ATOMS may lower the signature cap, never raise it.
std::size_t AtomCap() {
  const char* env = std::getenv("OBLIVION_MAX_ATOMS");
  if (env == nullptr || *env == '\0') return Signature::kMaxAtoms;
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0') {
    throw Error(std::string("OBLIVION_MAX_ATOMS: not a non-negative integer: '") + env + "'");
  }
  return std::min<std::size_t>(value, Signature::kMaxAtoms);
}

void RequireCap(std::size_t atoms, const std::string& what) {
  const std::size_t cap = AtomCap();
  if (atoms > cap) {
    throw CapExceededError(what + " has " + std::to_string(atoms) + " atoms, cap is " +
                           std::to_string(cap));
  }
}

KnowledgeBase LoadKb(const std::string& path) {
  KnowledgeBase kb = read_knowledge_base_file(path);
  RequireCap(kb.signature().size(), path);
  return kb;
}

Ocf LoadOcf(const std::string& path) {
  Ocf k = read_ocf_file(path);
  RequireCap(k.signature().size(), path);
  return k;
}

void PrintBeliefState(const BeliefState& bs, const Config& cfg, std::ostream& out) {
  if (cfg.json) {
    Json j = to_json(bs);
    j["count"] = bs.size();
    out << j.dump(2) << '\n';
    return;
  }
  out << "sig:";
  for (const auto& a : bs.signature().atoms()) out << ' ' << a;
  out << '\n';
  for (const auto& w : render_worlds(bs)) out << (w.empty() ? "(empty world)" : w) << '\n';
  out << bs.size() << (bs.size() == 1 ? " world" : " worlds");
  if (!bs.consistent()) out << " (inconsistent)";
  out << '\n';
}

void PrintOcf(const Ocf& k, const Config& cfg, std::ostream& out) {
  if (cfg.json) {
    out << to_json(k).dump(2) << '\n';
  } else {
    out << render_ocf(k);
  }
}

SignatureForgetOperator SignatureOperator(const std::string& name) {
  if (name.empty() || name == "marginalisation") return marginalisation_operator();
  if (name == "belief-erasing") return belief_erasing_operator();
  throw Error("unknown signature operator '" + name + "' (marginalisation, belief-erasing)");
}

FormulaForgetOperator FormulaOperator(const std::string& name) {
  if (name.empty() || name == "trivial") return trivial_formula_operator();
  if (name == "identity") return identity_formula_operator();
  if (name == "full-meet") return full_meet_contraction_operator();
  throw Error("unknown formula operator '" + name + "' (trivial, identity, full-meet)");
}

void PrintSuite(const SuiteReport& r, const Config& cfg, std::ostream& out) {
  if (cfg.json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << r.suite << " [" << r.operator_name << "] " << r.basis() << ", " << r.options.atoms
      << (r.options.atoms == 1 ? " atom" : " atoms");
  if (r.options.mode == SuiteMode::Random) {
    out << ", " << r.options.count << " cases, seed " << r.options.seed;
  }
  out << '\n';
  std::size_t width = 0;
  for (const auto& t : r.tallies) width = std::max(width, t.id.size());
  for (const auto& t : r.tallies) {
    out << "  " << t.id << std::string(width - t.id.size() + 2, ' ')
        << (t.violated == 0 ? "holds   " : "VIOLATED") << "  checked " << t.checked;
    if (t.violated != 0) out << ", violated " << t.violated;
    if (t.vacuous != 0) out << ", vacuous " << t.vacuous;
    out << '\n';
  }
  for (const auto& w : r.witnesses) out << "witness: " << w.witness.dump() << '\n';
  out << r.violations() << (r.violations() == 1 ? " violation" : " violations") << '\n';
}

int RunCheck(const Config& cfg, std::ostream& out) {
  SuiteOptions options;
  if (cfg.exhaustive) {
    options.mode = SuiteMode::Exhaustive;
    options.atoms = *cfg.exhaustive;
  } else {
    options.mode = SuiteMode::Random;
    options.count = *cfg.random;
    options.seed = cfg.seed;
    options.atoms = cfg.suite_atoms.value_or(cfg.suite == "ocf-props" ? 4 : 3);
  }
  RequireCap(options.atoms, "suite signature");

  SuiteReport report;
  if (cfg.suite == "dfp") {
    report = run_dfp_suite(options);
  } else if (cfg.suite == "dfpes-sig") {
    report = run_dfpes_signature_suite(SignatureOperator(cfg.op), options);
  } else if (cfg.suite == "dfpes-formula") {
    report = run_dfpes_formula_suite(FormulaOperator(cfg.op), options);
  } else if (cfg.suite == "ocf-props") {
    report = run_ocf_property_suite(options);
  } else {
    report = run_bridge_suite(options);
  }
  PrintSuite(report, cfg, out);
  return report.violations() == 0 ? kOk : kViolations;
}

int RunReproduce(const Config& cfg, std::ostream& out) {
  auto load = [](auto&& fn, const std::string& name) {
    TableCheck check;
    try {
      check = fn();
    } catch (const Error& e) {
      check.name = name;
      check.error = e.what();
    }
    return check;
  };
  const TableCheck t1 = load([&] { return reproduce_table1(LoadKb(cfg.table1_path)); }, "Table 1");
  const TableCheck t2 = load([&] { return reproduce_table2(LoadOcf(cfg.table2_path)); }, "Table 2");
  const bool pass = t1.pass() && t2.pass();
  if (cfg.json) {
    Json j;
    j["pass"] = pass;
    j["tables"] = Json::array({to_json(t1), to_json(t2)});
    out << j.dump(2) << '\n';
  } else {
    out << render_table_check(t1) << render_table_check(t2);
    out << "Table 1: " << (t1.pass() ? "PASS" : "FAIL") << ", Table 2: " << (t2.pass() ? "PASS" : "FAIL")
        << '\n';
  }
  return pass ? kOk : kViolations;
}

std::string Describe(const CensusReport& r) {
  std::ostringstream s;
  s << r.operator_space << " operators";
  if (r.method == "backtracking") s << " (backtracking search, " << r.search_nodes << " nodes)";
  s << ", " << r.survivors.size() << (r.survivors.size() == 1 ? " survivor" : " survivors");
  for (std::size_t i = 0; i < r.survivors.size(); ++i) {
    s << (i == 0 ? ": " : "; ") << r.survivors[i].description;
  }
  return s.str();
}

int RunCensus(const Config& cfg, std::ostream& out, std::ostream& err) {
  RequireCap(cfg.census_atoms, "census signature");
  if (cfg.census_atoms > 2) {
    throw CapExceededError("census is limited to 2 atoms, got " + std::to_string(cfg.census_atoms));
  }
  if (cfg.census_atoms == 2) err << "note: the 2-atom operator space is 15^240; searching by backtracking\n";
  static const char* kNames[] = {"p", "q"};
  std::vector<std::string> atoms(kNames, kNames + cfg.census_atoms);
  const CensusReport report = triviality_census(Signature(atoms));
  if (cfg.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << Describe(report) << '\n';
    static const char* kOrder[] = {"DFPes-L-1", "DFPes-L-6", "DFPes-L-2",
                                   "DFPes-L-3", "DFPes-L-4", "DFPes-L-5"};
    if (report.method == "enumeration") {
      out << "first violated postulate:\n";
      for (std::size_t i = 0; i < report.first_violation.size(); ++i) {
        out << "  " << kOrder[i] << "  " << report.first_violation[i] << '\n';
      }
    }
    for (const auto& s : report.survivors) {
      out << "survivor " << s.description << ": " << (s.verified ? "verified" : "NOT verified")
          << " against DFPes-L-1..6\n";
    }
  }
  bool ok = report.survivors.size() == 1 && report.survivors.front().constant_top &&
            report.survivors.front().verified;
  return ok ? kOk : kViolations;
}

int RunReplay(const Config& cfg, std::ostream& out) {
  Json witness;
  {
    std::ifstream in(cfg.witness_path);
    if (!in) throw Error("cannot open witness file '" + cfg.witness_path + "'");
    try {
      in >> witness;
    } catch (const Json::exception& e) {
      throw Error("witness file '" + cfg.witness_path + "': " + e.what());
    }
  }
  if (!witness.is_object() || !witness.contains("postulate") || !witness["postulate"].is_string()) {
    throw Error("witness has no 'postulate' field");
  }
  const std::string id = witness["postulate"];
  const std::string op = witness.value("operator", std::string());
  std::vector<PostulateReport> reports;
  if (id.rfind("DFPes-L-", 0) == 0) {
    reports = replay_dfpes_formula(FormulaOperator(op), witness);
  } else if (id.rfind("DFPes-", 0) == 0) {
    reports = replay_dfpes_signature(SignatureOperator(op), witness);
  } else if (id.rfind("DFP-", 0) == 0) {
    reports = replay_dfp(witness);
  } else {
    throw Error("cannot replay postulate '" + id + "'");
  }
  bool reproduced = false;
  Json j = Json::array();
  for (const auto& r : reports) {
    if (r.id == id && r.violated()) reproduced = true;
    j.push_back(to_json(r));
  }
  if (cfg.json) {
    out << Json{{"postulate", id}, {"reproduced", reproduced}, {"reports", j}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << "  " << r.id << "  " << to_string(r.status);
      if (!r.note.empty()) out << "  (" << r.note << ")";
      out << '\n';
    }
    out << id << (reproduced ? ": violation reproduced" : ": violation NOT reproduced") << '\n';
  }
  return reproduced ? kViolations : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Forgetting operators, ranking functions and their postulates.", "oblivion"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Shorthand for --format json");

  auto* models_cmd = app.add_subcommand("models", "Print the models of a knowledge base");
  models_cmd->add_option("kb", cfg.kb_path, ".kb file")->required();

  auto* forget_cmd = app.add_subcommand("forget", "Forget a set of atoms from a knowledge base");
  forget_cmd->add_option("kb", cfg.kb_path, ".kb file")->required();
  forget_cmd->add_option("--atoms", cfg.atoms, "Atoms to forget, comma separated");
  forget_cmd->add_flag("--original", cfg.original, "Report the result in the original language");

  auto* marg_cmd = app.add_subcommand("marginalise", "Marginalise a ranking to a sub-signature");
  marg_cmd->add_option("ocf", cfg.ocf_path, ".ocf file")->required();
  marg_cmd->add_option("--keep", cfg.keep, "Atoms to keep, comma separated")->required();

  auto* lift_cmd = app.add_subcommand("lift", "Lift a ranking to a super-signature");
  lift_cmd->add_option("ocf", cfg.ocf_path, ".ocf file")->required();
  lift_cmd->add_option("--to", cfg.to, "Target signature, comma separated")->required();

  auto* check_cmd = app.add_subcommand("check", "Run a postulate suite");
  check_cmd->add_option("suite", cfg.suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"dfp", "dfpes-sig", "dfpes-formula", "ocf-props", "bridge"}));
  auto* ex = check_cmd->add_option("--exhaustive", cfg.exhaustive, "Check every instance over n atoms");
  auto* rnd = check_cmd->add_option("--random", cfg.random, "Check k seeded random instances");
  ex->excludes(rnd);
  check_cmd->add_option("--seed", cfg.seed, "Seed for --random")->capture_default_str();
  check_cmd->add_option("--atoms", cfg.suite_atoms, "Signature size for --random")->excludes(ex);
  check_cmd->add_option("--operator", cfg.op,
                        "Operator under test: marginalisation, belief-erasing (dfpes-sig); "
                        "trivial, identity, full-meet (dfpes-formula)");

  auto* repro_cmd = app.add_subcommand("reproduce", "Recompute the bird example tables");
  repro_cmd->add_option("--kb", cfg.table1_path, "Knowledge base for table 1")->capture_default_str();
  repro_cmd->add_option("--ocf", cfg.table2_path, "Ranking for table 2")->capture_default_str();

  auto* census_cmd = app.add_subcommand("census", "Enumerate belief-level formula forgetting operators");
  census_cmd->add_option("--atoms", cfg.census_atoms, "Signature size (1 or 2)")->capture_default_str();

  auto* replay_cmd = app.add_subcommand("replay", "Re-check a violation witness");
  replay_cmd->add_option("witness", cfg.witness_path, "JSON witness file")->required();

  // --json may follow the subcommand as well.
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", cfg.json, "Shorthand for --format json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (check_cmd->parsed() && !cfg.exhaustive && !cfg.random) {
    err << "error: check needs --exhaustive n or --random k\n";
    return kInputError;
  }
  if (cfg.format == "json") cfg.json = true;

  try {
    if (models_cmd->parsed()) {
      PrintBeliefState(LoadKb(cfg.kb_path).models(), cfg, out);
    } else if (forget_cmd->parsed()) {
      const KnowledgeBase kb = LoadKb(cfg.kb_path);
      const Signature p = parse_atom_list(cfg.atoms);
      for (const auto& a : p.atoms()) {
        if (!kb.signature().contains(a)) throw UnknownAtomError(a);
      }
      PrintBeliefState(cfg.original ? forget_original(kb, p) : forget_reduced(kb, p), cfg, out);
    } else if (marg_cmd->parsed()) {
      PrintOcf(marginalise(LoadOcf(cfg.ocf_path), parse_atom_list(cfg.keep)), cfg, out);
    } else if (lift_cmd->parsed()) {
      const Signature super = parse_atom_list(cfg.to);
      RequireCap(super.size(), "--to");
      PrintOcf(lift(LoadOcf(cfg.ocf_path), super), cfg, out);
    } else if (check_cmd->parsed()) {
      return RunCheck(cfg, out);
    } else if (repro_cmd->parsed()) {
      return RunReproduce(cfg, out);
    } else if (census_cmd->parsed()) {
      return RunCensus(cfg, out, err);
    } else if (replay_cmd->parsed()) {
      return RunReplay(cfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace oblivion::cli
