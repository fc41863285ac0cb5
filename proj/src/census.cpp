#include "oblivion/census.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

#include "oblivion/error.hpp"

namespace oblivion {

namespace {

constexpr std::uint8_t kUnassigned = 0xff;

// Bitmask view of the operator space. Model sets are bitmasks over world
// codes; state i has mask states[i]; formula class c has mask c.
struct Space {
  std::uint32_t worlds = 0;
  std::uint32_t full = 0;
  std::uint32_t classes = 0;
  std::vector<std::uint32_t> states;
  std::vector<std::int32_t> state_of_mask;  // -1 for the empty mask

  explicit Space(const Signature& sig) {
    worlds = sig.world_count();
    classes = std::uint32_t{1} << worlds;
    full = classes - 1;
    state_of_mask.assign(classes, -1);
    for (std::uint32_t m = 1; m < classes; ++m) {
      state_of_mask[m] = static_cast<std::int32_t>(states.size());
      states.push_back(m);
    }
  }

  std::size_t S() const { return states.size(); }
  std::size_t Cell(std::size_t s, std::uint32_t c) const { return s * classes + c; }
};

static bool Subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

// Checks the table against every postulate instance whose entries are all
// assigned. Returns the first failing postulate number (1..6) or 0.
// Check order: L-1, L-6, L-2, L-3, L-4, L-5.
int FirstViolation(const Space& sp, const std::uint8_t* out) {
  const std::size_t S = sp.S();
  const std::uint32_t C = sp.classes;
  auto at = [&](std::size_t s, std::uint32_t c) { return out[sp.Cell(s, c)]; };
  auto mask = [&](std::uint8_t s) { return sp.states[s]; };

  for (std::size_t s = 0; s < S; ++s) {
    for (std::uint32_t c = 0; c < C; ++c) {
      const auto o = at(s, c);
      if (o == kUnassigned) continue;
      if (!Subset(sp.states[s], mask(o))) return 1;
    }
  }
  for (std::size_t s = 0; s < S; ++s) {
    for (std::uint32_t c = 0; c < C; ++c) {
      const auto o = at(s, c);
      if (o == kUnassigned || c == sp.full) continue;
      if (Subset(mask(o), c)) return 6;
    }
  }
  for (std::size_t s1 = 0; s1 < S; ++s1) {
    for (std::size_t s2 = 0; s2 < S; ++s2) {
      if (!Subset(sp.states[s1], sp.states[s2])) continue;
      for (std::uint32_t c = 0; c < C; ++c) {
        const auto a = at(s1, c), b = at(s2, c);
        if (a == kUnassigned || b == kUnassigned) continue;
        if (!Subset(mask(a), mask(b))) return 2;
      }
    }
  }
  // L-3: φ ⊨ ψ ⇒ out(s, φ) = out(out(s, ψ), φ)
  for (std::size_t s = 0; s < S; ++s) {
    for (std::uint32_t phi = 0; phi < C; ++phi) {
      const auto lhs = at(s, phi);
      if (lhs == kUnassigned) continue;
      for (std::uint32_t psi = 0; psi < C; ++psi) {
        if (!Subset(phi, psi)) continue;
        const auto mid = at(s, psi);
        if (mid == kUnassigned) continue;
        const auto rhs = at(mid, phi);
        if (rhs != kUnassigned && rhs != lhs) return 3;
      }
    }
  }
  // L-4: out(s, φ∨ψ) = out(s, φ) ∪ out(s, ψ)
  for (std::size_t s = 0; s < S; ++s) {
    for (std::uint32_t phi = 0; phi < C; ++phi) {
      const auto a = at(s, phi);
      if (a == kUnassigned) continue;
      for (std::uint32_t psi = 0; psi < C; ++psi) {
        const auto b = at(s, psi), d = at(s, phi | psi);
        if (b == kUnassigned || d == kUnassigned) continue;
        if (mask(d) != (mask(a) | mask(b))) return 4;
      }
    }
  }
  // L-5: out(s, φ∨ψ) = out(out(s, φ), ψ)
  for (std::size_t s = 0; s < S; ++s) {
    for (std::uint32_t phi = 0; phi < C; ++phi) {
      const auto mid = at(s, phi);
      if (mid == kUnassigned) continue;
      for (std::uint32_t psi = 0; psi < C; ++psi) {
        const auto d = at(s, phi | psi), rhs = at(mid, psi);
        if (d == kUnassigned || rhs == kUnassigned) continue;
        if (d != rhs) return 5;
      }
    }
  }
  return 0;
}

std::string PowerString(std::uint64_t base, std::uint64_t exponent) {
  // Exact when it fits in 64 bits, otherwise symbolic.
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (value > UINT64_MAX / base) return std::to_string(base) + "^" + std::to_string(exponent);
    value *= base;
  }
  return std::to_string(value);
}

CensusReport EmptyReport(const Signature& sig, const Space& sp) {
  if (sig.size() > 2) {
    throw CapExceededError("census is limited to 2 atoms, got " + std::to_string(sig.size()));
  }
  CensusReport r;
  r.signature = sig;
  r.state_masks = sp.states;
  r.formula_classes = sp.classes;
  r.operator_space = PowerString(sp.S(), sp.S() * sp.classes);
  return r;
}

std::vector<std::vector<std::uint32_t>> ToTable(const Space& sp, const std::uint8_t* out) {
  std::vector<std::vector<std::uint32_t>> table(sp.S(), std::vector<std::uint32_t>(sp.classes));
  for (std::size_t s = 0; s < sp.S(); ++s) {
    for (std::uint32_t c = 0; c < sp.classes; ++c) table[s][c] = out[sp.Cell(s, c)];
  }
  return table;
}

void Finish(CensusReport& r, const Space& sp) {
  std::sort(r.survivors.begin(), r.survivors.end(),
            [](const CensusSurvivor& a, const CensusSurvivor& b) { return a.outputs < b.outputs; });
  const std::uint32_t full_index = static_cast<std::uint32_t>(sp.state_of_mask[sp.full]);
  for (std::size_t i = 0; i < r.survivors.size(); ++i) {
    auto& sv = r.survivors[i];
    sv.constant_top = std::all_of(sv.outputs.begin(), sv.outputs.end(), [&](const auto& row) {
      return std::all_of(row.begin(), row.end(), [&](std::uint32_t o) { return o == full_index; });
    });
    sv.description = sv.constant_top ? "constant-⊤" : "non-trivial operator #" + std::to_string(i);
    const auto op = census_operator(r, sv.outputs, "census-survivor");
    sv.verified = !find_dfpes_formula_violation(op, r.signature).violation.has_value();
  }
}

}  // namespace

CensusReport triviality_census(const Signature& signature, const CensusOptions& options) {
  if (signature.size() > 2) {
    throw CapExceededError("census is limited to 2 atoms, got " + std::to_string(signature.size()));
  }
  if (signature.size() == 2) return triviality_census_search(signature);

  const Space sp(signature);
  CensusReport report = EmptyReport(signature, sp);
  report.method = "enumeration";
  const std::size_t cells = sp.S() * sp.classes;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= sp.S();
  report.operators_enumerated = total;

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  struct Shard {
    std::array<std::uint64_t, 6> first_violation{};
    std::vector<std::vector<std::vector<std::uint32_t>>> survivors;
  };
  // Shard t handles the contiguous index range [t*total/T, (t+1)*total/T).
  auto run = [&](unsigned t) {
    Shard shard;
    const std::uint64_t begin = total * t / threads, end = total * (t + 1) / threads;
    std::vector<std::uint8_t> out(cells);
    for (std::uint64_t index = begin; index < end; ++index) {
      std::uint64_t rest = index;
      for (std::size_t i = 0; i < cells; ++i) {
        out[i] = static_cast<std::uint8_t>(rest % sp.S());
        rest /= sp.S();
      }
      const int failed = FirstViolation(sp, out.data());
      if (failed == 0) {
        shard.survivors.push_back(ToTable(sp, out.data()));
      } else {
        static constexpr int kSlot[] = {-1, 0, 2, 3, 4, 5, 1};
        ++shard.first_violation[kSlot[failed]];
      }
    }
    return shard;
  };
  std::vector<std::future<Shard>> futures;
  for (unsigned t = 0; t < threads; ++t) futures.push_back(std::async(std::launch::async, run, t));
  for (auto& f : futures) {
    Shard shard = f.get();
    for (std::size_t i = 0; i < 6; ++i) report.first_violation[i] += shard.first_violation[i];
    for (auto& table : shard.survivors) report.survivors.push_back({std::move(table), false, false, {}});
  }
  Finish(report, sp);
  return report;
}

CensusReport triviality_census_search(const Signature& signature) {
  const Space sp(signature);
  CensusReport report = EmptyReport(signature, sp);
  report.method = "backtracking";

  // Most constrained first: states and formula classes with more worlds.
  std::vector<std::size_t> order;
  std::vector<std::size_t> state_order(sp.S());
  for (std::size_t s = 0; s < sp.S(); ++s) state_order[s] = s;
  std::stable_sort(state_order.begin(), state_order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(sp.states[a]) > std::popcount(sp.states[b]);
  });
  std::vector<std::uint32_t> class_order(sp.classes);
  for (std::uint32_t c = 0; c < sp.classes; ++c) class_order[c] = c;
  std::stable_sort(class_order.begin(), class_order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (std::size_t s : state_order) {
    for (std::uint32_t c : class_order) order.push_back(sp.Cell(s, c));
  }

  std::vector<std::uint8_t> out(sp.S() * sp.classes, kUnassigned);
  // Depth-first over `order`; each level tries every state.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    ++report.search_nodes;
    if (FirstViolation(sp, out.data()) != 0) return;
    if (depth == order.size()) {
      report.survivors.push_back({ToTable(sp, out.data()), false, false, {}});
      return;
    }
    const std::size_t cell = order[depth];
    for (std::size_t value = 0; value < sp.S(); ++value) {
      out[cell] = static_cast<std::uint8_t>(value);
      self(self, depth + 1);
    }
    out[cell] = kUnassigned;
  };
  search(search, 0);
  Finish(report, sp);
  return report;
}

FormulaForgetOperator census_operator(const CensusReport& report,
                                      const std::vector<std::vector<std::uint32_t>>& outputs,
                                      std::string name) {
  const Signature sig = report.signature;
  const auto masks = report.state_masks;
  auto mask_of = [](const BeliefState& bs) {
    std::uint32_t m = 0;
    for (WorldCode c : bs.codes()) m |= std::uint32_t{1} << c;
    return m;
  };
  return {std::move(name), [=](const BeliefState& s, const Formula& phi) {
            require_same_signature(s.signature(), sig, "census operator");
            const auto it = std::find(masks.begin(), masks.end(), mask_of(s));
            if (it == masks.end()) throw Error("census operators are defined on consistent states only");
            const std::uint32_t result = masks[outputs[it - masks.begin()][mask_of(models(phi, sig))]];
            std::vector<WorldCode> codes;
            for (WorldCode c = 0; c < sig.world_count(); ++c) {
              if ((result >> c) & 1u) codes.push_back(c);
            }
            return BeliefState(sig, std::move(codes));
          }};
}

int census_first_violation(const CensusReport& report,
                           const std::vector<std::vector<std::uint32_t>>& outputs) {
  const Space sp(report.signature);
  std::vector<std::uint8_t> out(sp.S() * sp.classes);
  for (std::size_t s = 0; s < sp.S(); ++s) {
    for (std::uint32_t c = 0; c < sp.classes; ++c) {
      out[sp.Cell(s, c)] = static_cast<std::uint8_t>(outputs.at(s).at(c));
    }
  }
  return FirstViolation(sp, out.data());
}

Json to_json(const CensusReport& report) {
  auto state_json = [&](std::uint32_t mask) {
    std::vector<WorldCode> codes;
    for (WorldCode c = 0; c < report.signature.world_count(); ++c) {
      if ((mask >> c) & 1u) codes.push_back(c);
    }
    return render_worlds(BeliefState(report.signature, std::move(codes)));
  };
  auto class_text = [&](std::uint32_t mask) {
    std::vector<WorldCode> codes;
    for (WorldCode c = 0; c < report.signature.world_count(); ++c) {
      if ((mask >> c) & 1u) codes.push_back(c);
    }
    return render_formula(canonical_formula(BeliefState(report.signature, std::move(codes))));
  };

  Json out;
  out["signature"] = to_json(report.signature);
  out["states"] = report.state_masks.size();
  out["formula_classes"] = report.formula_classes;
  out["operator_space"] = report.operator_space;
  out["method"] = report.method;
  if (report.method == "enumeration") {
    out["operators_enumerated"] = report.operators_enumerated;
    static constexpr const char* kIds[] = {"DFPes-L-1", "DFPes-L-6", "DFPes-L-2",
                                           "DFPes-L-3", "DFPes-L-4", "DFPes-L-5"};
    Json rejected;
    for (std::size_t i = 0; i < 6; ++i) rejected[kIds[i]] = report.first_violation[i];
    out["rejected_by_first_violation"] = std::move(rejected);
  } else {
    out["search_nodes"] = report.search_nodes;
  }
  out["survivor_count"] = report.survivors.size();
  Json survivors = Json::array();
  for (const auto& sv : report.survivors) {
    Json entry;
    entry["description"] = sv.description;
    entry["constant_top"] = sv.constant_top;
    entry["verified"] = sv.verified;
    Json table = Json::array();
    for (std::size_t s = 0; s < sv.outputs.size(); ++s) {
      Json row;
      row["state"] = state_json(report.state_masks[s]);
      Json outputs;
      for (std::uint32_t c = 0; c < report.formula_classes; ++c) {
        outputs[class_text(c)] = state_json(report.state_masks[sv.outputs[s][c]]);
      }
      row["outputs"] = std::move(outputs);
      table.push_back(std::move(row));
    }
    entry["table"] = std::move(table);
    survivors.push_back(std::move(entry));
  }
  out["survivors"] = std::move(survivors);
  return out;
}

}  // namespace oblivion
