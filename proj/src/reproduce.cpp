#include "oblivion/reproduce.hpp"

#include <algorithm>
#include <utility>

#include "oblivion/forgetting.hpp"

namespace oblivion {

bool TableCheck::pass() const {
  return error.empty() &&
         std::all_of(columns.begin(), columns.end(), [](const ColumnCheck& c) { return c.pass(); });
}

namespace {

const Signature& Birds() {
  static const Signature sig{"p", "b", "f"};
  return sig;
}

std::vector<std::string> Entries(const BeliefState& bs) {
  std::vector<std::string> out;
  for (const auto& w : bs.worlds()) out.push_back(render_world(w));
  return out;
}

std::vector<std::string> Entries(const Ocf& k) {
  std::vector<std::string> out;
  for (WorldCode c = 0; c < k.signature().world_count(); ++c) {
    out.push_back(render_world(World(k.signature(), c)) + " : " + std::to_string(k.rank(c)));
  }
  return out;
}

// Expected columns are written with literals in p, b, f order.
std::vector<std::string> Expected(const Signature& sig, std::initializer_list<const char*> worlds) {
  std::vector<World> ws;
  for (const char* w : worlds) ws.push_back(parse_world(w, sig));
  return Entries(BeliefState(sig, ws));
}

std::vector<std::string> Expected(const Signature& sig,
                                  std::initializer_list<std::pair<const char*, std::int64_t>> ranks) {
  std::vector<std::pair<World, std::int64_t>> as;
  for (const auto& [w, r] : ranks) as.emplace_back(parse_world(w, sig), r);
  return Entries(make_ocf(sig, as));
}

}  // namespace

TableCheck reproduce_table1(const KnowledgeBase& kb) {
  TableCheck out{"Table 1", {}, {}};
  if (kb.signature() != Birds()) {
    out.error = "expected signature " + Birds().to_string() + ", got " + kb.signature().to_string();
    return out;
  }
  const Signature p{"p"};
  const Signature bf{"b", "f"};
  out.columns.push_back({"models", Expected(Birds(), {"-p -b -f", "p b -f", "-p b f"}),
                         Entries(kb.models())});
  out.columns.push_back({"forget {p}", Expected(bf, {"-b -f", "b -f", "b f"}),
                         Entries(forget_reduced(kb, p))});
  out.columns.push_back({"forget {p}, original language",
                         Expected(Birds(), {"-p -b -f", "p -b -f", "p b -f", "-p b -f", "-p b f", "p b f"}),
                         Entries(forget_original(kb, p))});
  return out;
}

TableCheck reproduce_table2(const Ocf& k) {
  TableCheck out{"Table 2", {}, {}};
  if (k.signature() != Birds()) {
    out.error = "expected signature " + Birds().to_string() + ", got " + k.signature().to_string();
    return out;
  }
  const Signature bf{"b", "f"};
  const Ocf marginal = marginalise(k, bf);
  out.columns.push_back({"kappa",
                         Expected(Birds(), {{"p b f", 2},
                                            {"-p b -f", 2},
                                            {"p -b -f", 1},
                                            {"-p -b f", 1},
                                            {"p -b f", 1},
                                            {"-p -b -f", 0},
                                            {"p b -f", 0},
                                            {"-p b f", 0}}),
                         Entries(k)});
  out.columns.push_back({"marginal on {b, f}",
                         Expected(bf, {{"-b f", 1}, {"-b -f", 0}, {"b -f", 0}, {"b f", 0}}),
                         Entries(marginal)});
  out.columns.push_back({"marginal lifted to {b, f, p}",
                         Expected(Birds(), {{"p -b f", 1},
                                            {"-p -b f", 1},
                                            {"p b f", 0},
                                            {"-p b -f", 0},
                                            {"p -b -f", 0},
                                            {"-p -b -f", 0},
                                            {"p b -f", 0},
                                            {"-p b f", 0}}),
                         Entries(lift(marginal, Birds()))});
  return out;
}

std::string render_table_check(const TableCheck& check) {
  std::string out = check.name + ": " + (check.pass() ? "PASS" : "FAIL") + "\n";
  if (!check.error.empty()) return out + "  " + check.error + "\n";
  for (const auto& col : check.columns) {
    out += "  " + col.name + ": " + (col.pass() ? "PASS" : "FAIL") + "\n";
    const std::size_t rows = std::max(col.expected.size(), col.actual.size());
    std::size_t width = 8;
    for (const auto& e : col.expected) width = std::max(width, e.size());
    out += "    " + std::string("expected") + std::string(width - 8 + 3, ' ') + "actual\n";
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string e = i < col.expected.size() ? col.expected[i] : "";
      const std::string a = i < col.actual.size() ? col.actual[i] : "";
      out += "    " + e + std::string(width - e.size() + 3, ' ') + a + (e == a ? "" : "   <--") + "\n";
    }
  }
  return out;
}

Json to_json(const TableCheck& check) {
  Json out;
  out["table"] = check.name;
  out["pass"] = check.pass();
  if (!check.error.empty()) out["error"] = check.error;
  Json cols = Json::array();
  for (const auto& col : check.columns) {
    Json c;
    c["column"] = col.name;
    c["pass"] = col.pass();
    c["expected"] = col.expected;
    c["actual"] = col.actual;
    if (!col.pass()) {
      Json missing = Json::array();
      Json unexpected = Json::array();
      for (const auto& e : col.expected) {
        if (std::find(col.actual.begin(), col.actual.end(), e) == col.actual.end()) missing.push_back(e);
      }
      for (const auto& a : col.actual) {
        if (std::find(col.expected.begin(), col.expected.end(), a) == col.expected.end()) unexpected.push_back(a);
      }
      c["missing"] = std::move(missing);
      c["unexpected"] = std::move(unexpected);
    }
    cols.push_back(std::move(c));
  }
  out["columns"] = std::move(cols);
  return out;
}

}  // namespace oblivion
