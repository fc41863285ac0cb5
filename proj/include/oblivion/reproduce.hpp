#pragma once

#include <string>
#include <vector>

#include "oblivion/knowledge_base.hpp"
#include "oblivion/ocf.hpp"
#include "oblivion/serialize.hpp"

namespace oblivion {

// One recomputed column, as "world" or "world : rank" entries in world
// code order.
struct ColumnCheck {
  std::string name;
  std::vector<std::string> expected;
  std::vector<std::string> actual;
  bool pass() const { return expected == actual; }
};

struct TableCheck {
  std::string name;
  std::string error;  // set when the input could not be evaluated at all
  std::vector<ColumnCheck> columns;
  bool pass() const;
};

// Models of the bird knowledge base and its forgetting of {p}, in both
// languages. The input must be over {p, b, f}.
TableCheck reproduce_table1(const KnowledgeBase& kb);
// The bird ranking, its marginal on {b, f} and that marginal lifted back.
TableCheck reproduce_table2(const Ocf& k);

std::string render_table_check(const TableCheck& check);
Json to_json(const TableCheck& check);

}  // namespace oblivion
