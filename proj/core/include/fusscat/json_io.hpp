#pragma once

#include <nlohmann/json.hpp>

#include "fusscat/bijections.hpp"
#include "fusscat/dissections.hpp"
#include "fusscat/oracles.hpp"
#include "fusscat/partitions.hpp"
#include "fusscat/shi_tableau.hpp"

// Wire formats:
//   partition    {"n", "m", "parts": [int...]}
//   tableau      {"n", "m", "rows": [[k_{i,i}, ..., k_{i,n}], ...]}
//   dissection   {"n", "m", "labeling": "standard"|"alternating", "diagonals": [[a, b], ...]}, a < b
//   refined      {"n", "m", "rows": [{"J": [int...], "count": "<decimal>"}, ...]}
//   verdict      {"check", "n", "m", "status": "ok"|"mismatch", "details"}
//
// The *_from_json functions throw SchemaError when the shape is wrong and the
// domain errors (InvalidPartition, InvalidTableau, ...) when the content is.

namespace fusscat {

using json = nlohmann::json;

json to_json(const StaircasePartition& p);
json to_json(const ShiTableau& t);
json to_json(const Dissection& d);
json to_json(const RefinedCountTable& table);
json to_json(const oracles::Verdict& v);

StaircasePartition partition_from_json(const json& j);
TableauFilling filling_from_json(const json& j);
ShiTableau tableau_from_json(const json& j);
Dissection dissection_from_json(const json& j);
RefinedCountTable refined_table_from_json(const json& j);

enum class Family { Partition, Tableau, Dissection };

/// Guesses the family from the keys present ("parts", "rows", "diagonals").
/// Throws SchemaError.
Family detect_family(const json& j);

}  // namespace fusscat
