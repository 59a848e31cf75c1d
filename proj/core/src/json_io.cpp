#include "fusscat/json_io.hpp"

namespace fusscat {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const json& v, const char* what) {
  if (!v.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw SchemaError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::pair<int, int> rank_and_fuss(const json& j) {
  const int n = int_field(j, "n"), m = int_field(j, "m");
  if (n < 1 || m < 1) throw SchemaError("n and m must be >= 1");
  return {n, m};
}

}  // namespace

json to_json(const StaircasePartition& p) {
  return {{"n", p.rank()}, {"m", p.fuss()}, {"parts", std::vector<int>(p.parts().begin(), p.parts().end())}};
}

json to_json(const ShiTableau& t) {
  return {{"n", t.rank()}, {"m", t.fuss()}, {"rows", t.rows()}};
}

json to_json(const Dissection& d) {
  json diagonals = json::array();
  for (const auto& diag : d.diagonals()) diagonals.push_back({diag.low, diag.high});
  return {{"n", d.polygon().rank()},
          {"m", d.polygon().fuss()},
          {"labeling", to_string(d.polygon().labeling())},
          {"diagonals", std::move(diagonals)}};
}

json to_json(const RefinedCountTable& table) {
  json rows = json::array();
  for (const auto& [J, count] : table.entries) {
    rows.push_back({{"J", J}, {"count", count.str()}});
  }
  return {{"n", table.n}, {"m", table.m}, {"rows", std::move(rows)}};
}

json to_json(const oracles::Verdict& v) {
  return {{"check", v.check},
          {"n", v.n},
          {"m", v.m},
          {"status", v.ok ? "ok" : "mismatch"},
          {"details", v.details}};
}

StaircasePartition partition_from_json(const json& j) {
  const auto [n, m] = rank_and_fuss(j);
  return StaircasePartition::validate(int_array(field(j, "parts"), "parts"), n, m);
}

TableauFilling filling_from_json(const json& j) {
  const auto [n, m] = rank_and_fuss(j);
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw SchemaError("rows must be an array");
  std::vector<std::vector<int>> values;
  for (const auto& row : rows) values.push_back(int_array(row, "rows[i]"));
  if (values.size() != static_cast<std::size_t>(n)) throw SchemaError("rows must have n entries");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != static_cast<std::size_t>(n) - i) {
      throw SchemaError("row " + std::to_string(i + 1) + " must have " +
                        std::to_string(static_cast<std::size_t>(n) - i) + " entries");
    }
  }
  return TableauFilling::from_rows(n, m, values);
}

ShiTableau tableau_from_json(const json& j) { return ShiTableau::validate(filling_from_json(j)); }

Dissection dissection_from_json(const json& j) {
  const auto [n, m] = rank_and_fuss(j);
  const auto& labeling = field(j, "labeling");
  if (!labeling.is_string()) throw SchemaError("labeling must be a string");
  const auto& raw = field(j, "diagonals");
  if (!raw.is_array()) throw SchemaError("diagonals must be an array");
  std::vector<Diagonal> diagonals;
  for (const auto& pair : raw) {
    const auto ends = int_array(pair, "diagonal");
    if (ends.size() != 2) throw SchemaError("each diagonal is a pair [a, b]");
    if (ends[0] >= ends[1]) throw SchemaError("diagonal endpoints must satisfy a < b");
    diagonals.push_back({ends[0], ends[1]});
  }
  return Dissection::validate(make_polygon(n, m, labeling_from_string(labeling.get<std::string>())),
                              std::move(diagonals));
}

RefinedCountTable refined_table_from_json(const json& j) {
  const auto [n, m] = rank_and_fuss(j);
  RefinedCountTable table{n, m, {}};
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw SchemaError("rows must be an array");
  for (const auto& row : rows) {
    const auto& count = field(row, "count");
    if (!count.is_string()) throw SchemaError("count must be a decimal string");
    try {
      table.entries[int_array(field(row, "J"), "J")] = BigInt(count.get<std::string>());
    } catch (const std::runtime_error&) {
      throw SchemaError("count is not a decimal integer");
    }
  }
  return table;
}

Family detect_family(const json& j) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  if (j.contains("parts")) return Family::Partition;
  if (j.contains("rows")) return Family::Tableau;
  if (j.contains("diagonals")) return Family::Dissection;
  throw SchemaError("cannot tell the object's family (no parts/rows/diagonals field)");
}

}  // namespace fusscat
