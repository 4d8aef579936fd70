#pragma once

// CSV and JSON forms of stationary-point tables and N(sigma) curves. Both
// formats carry the same fields: sigma, n, e_total, e_kin, e_trap, e_int, kind.

#include "gpvar/solver.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <vector>

namespace gpvar {

void write_csv(std::ostream& out, const BranchCurve& curve);
nlohmann::json to_json(const BranchCurve& curve);

nlohmann::json to_json(const EnergyBreakdown& energy);
nlohmann::json to_json(const StationaryPoint& point);
nlohmann::json to_json(const std::vector<StationaryPoint>& points);

void write_csv(std::ostream& out, const std::vector<StationaryPoint>& points);

} // namespace gpvar
