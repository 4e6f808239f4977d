#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "llip/bounds.hpp"
#include "llip/config.hpp"
#include "llip/operators.hpp"

namespace llip {

// ordered_json keeps insertion order, so output key order is fixed and
// stdout is byte-stable for identical inputs.
using json = nlohmann::ordered_json;

json grid_to_json(const CompactGrid& g);
GridPtr grid_from_json(const json& j);

json function_to_json(const GridFunction& f);
GridFunction function_from_json(const json& j, const GridPtr& grid);

json pwl_to_json(const ScalarPWL& p);
ScalarPWL pwl_from_json(const json& j);

/// Operator envelope {"kind": ..., "grid_id": ..., "grid": {...}, payload}.
/// The grid is embedded on output; on input an embedded grid wins, otherwise
/// the fallback grid is used and its id checked.
json operator_to_json(const OperatorRep& op);
OperatorRep operator_from_json(const json& j, const GridPtr& fallback = nullptr);

json continuity_to_json(const ContinuityReport& c);
json bound_report_to_json(const BoundReport& r);

/// CSV with one row per point: coordinates, then the value.
std::string function_to_csv(const GridFunction& f);
GridFunction function_from_csv(std::istream& in, Metric metric);

Config config_from_json(const json& j);

json parse_json_file(const std::string& path);

}  // namespace llip
