#pragma once

#include <json.hpp>

#include "synreg/grid.hpp"
#include "synreg/position.hpp"
#include "synreg/program_poset.hpp"
#include "synreg/regions.hpp"
#include "synreg/resources.hpp"
#include "synreg/statespace.hpp"

namespace synreg {

// "bot", "top", {"seq":[p,q]}, {"or":[p,q]}, {"par":[p,q]},
// {"loop":{"n":k,"p":p}}. Loop indices beyond 64 bits are written as decimal
// strings; both forms are accepted on input.
nlohmann::json position_to_json(const Position& p);
// Throws Error on malformed input.
Position position_from_json(const nlohmann::json& j);

nlohmann::json grid_point_to_json(const GridPoint& p);
GridPoint grid_point_from_json(const nlohmann::json& j);

// {mutex: count}, zero counts omitted.
nlohmann::json consumption_to_json(const ConsumptionMap& m);

// [{"low": ..., "high": ...}], sorted by the serialized (low, high) pair.
nlohmann::json region_to_json(const Region<Position>& r);
nlohmann::json region_to_json(const Region<GridPoint>& r);

// Parse a region file and check it against the poset: every endpoint must be
// a point of it and every interval nonempty. Throws Error otherwise.
Region<Position> position_region_from_json(const nlohmann::json& j, const ProgramPoset& poset);
Region<GridPoint> grid_region_from_json(const nlohmann::json& j, const Grid& grid);

// {"conservative", "delta", "positions", "forbidden", "fundamental",
//  "deadlocks", "unroll"}
nlohmann::json report_to_json(const Analysis& a);

}  // namespace synreg
