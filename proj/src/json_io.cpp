#include "synreg/json_io.hpp"

#include <algorithm>
#include <limits>

#include "synreg/errors.hpp"

namespace synreg {

using nlohmann::json;

json position_to_json(const Position& p) {
  switch (p.kind()) {
    case Position::Kind::Bot: return "bot";
    case Position::Kind::Top: return "top";
    case Position::Kind::Seq: return {{"seq", {position_to_json(p.left()), position_to_json(p.right())}}};
    case Position::Kind::Choice:
      return {{"or", {position_to_json(p.left()), position_to_json(p.right())}}};
    case Position::Kind::Par: return {{"par", {position_to_json(p.left()), position_to_json(p.right())}}};
    case Position::Kind::Loop: {
      json n;
      if (p.index() <= std::numeric_limits<std::uint64_t>::max())
        n = p.index().convert_to<std::uint64_t>();
      else
        n = p.index().str();
      return {{"loop", {{"n", n}, {"p", position_to_json(p.body())}}}};
    }
  }
  return nullptr;
}

namespace {

[[noreturn]] void bad(const json& j, const std::string& why) {
  throw Error("malformed position " + j.dump() + ": " + why);
}

LoopIndex index_from_json(const json& j) {
  if (j.is_number_unsigned()) return LoopIndex(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) bad(j, "negative loop index");
    return LoopIndex(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      bad(j, "loop index is not a natural number");
    return LoopIndex(s);
  }
  bad(j, "loop index is not a natural number");
}

}  // namespace

Position position_from_json(const json& j) {
  if (j.is_string()) {
    if (j == "bot") return Position::bot();
    if (j == "top") return Position::top();
    bad(j, "unknown atom");
  }
  if (!j.is_object() || j.size() != 1) bad(j, "expected \"bot\", \"top\" or a one-key object");
  const auto& [key, val] = *j.items().begin();
  if (key == "loop") {
    if (!val.is_object() || !val.contains("n") || !val.contains("p") || val.size() != 2)
      bad(j, "loop needs exactly \"n\" and \"p\"");
    return Position::loop(index_from_json(val.at("n")), position_from_json(val.at("p")));
  }
  if (!val.is_array() || val.size() != 2) bad(j, "expected a pair");
  Position l = position_from_json(val[0]);
  Position r = position_from_json(val[1]);
  if (key == "seq") return Position::seq(std::move(l), std::move(r));
  if (key == "or") return Position::choice(std::move(l), std::move(r));
  if (key == "par") return Position::par(std::move(l), std::move(r));
  bad(j, "unknown constructor \"" + key + "\"");
}

json grid_point_to_json(const GridPoint& p) { return p.coords; }

GridPoint grid_point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("malformed grid point " + j.dump());
  GridPoint p;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw Error("malformed grid point " + j.dump());
    p.coords.push_back(c.get<std::int64_t>());
  }
  return p;
}

json consumption_to_json(const ConsumptionMap& m) {
  json out = json::object();
  for (const auto& [name, amount] : m.entries()) out[name] = amount;
  return out;
}

namespace {

template <class Point, class F>
json region_json(const Region<Point>& r, F point_json) {
  std::vector<std::pair<std::string, json>> items;
  for (const auto& i : r) {
    json item = {{"low", point_json(i.low)}, {"high", point_json(i.high)}};
    items.emplace_back(item["low"].dump() + "\x1f" + item["high"].dump(), std::move(item));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (auto& [key, item] : items) out.push_back(std::move(item));
  return out;
}

template <class Poset, class F, class Check>
RegionOf<Poset> region_from(const json& j, const Poset& poset, F parse_point, Check check) {
  if (!j.is_array()) throw Error("a region file holds a JSON array of intervals");
  std::vector<IntervalOf<Poset>> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("low") || !item.contains("high"))
      throw Error("malformed interval " + item.dump() + ": expected {\"low\", \"high\"}");
    auto low = parse_point(item.at("low"));
    auto high = parse_point(item.at("high"));
    check(low);
    check(high);
    out.push_back(make_interval(poset, std::move(low), std::move(high)));
  }
  return RegionOf<Poset>(std::move(out));
}

}  // namespace

json region_to_json(const Region<Position>& r) { return region_json(r, position_to_json); }

json region_to_json(const Region<GridPoint>& r) { return region_json(r, grid_point_to_json); }

Region<Position> position_region_from_json(const json& j, const ProgramPoset& poset) {
  return region_from(j, poset, position_from_json, [&](const Position& p) {
    try {
      poset.check(p);
    } catch (const InvalidPosition& e) {
      throw Error(e.what());
    }
  });
}

Region<GridPoint> grid_region_from_json(const json& j, const Grid& grid) {
  return region_from(j, grid, grid_point_from_json, [&](const GridPoint& p) {
    if (!grid.contains(p)) throw Error(to_string(p) + " is not a point of the grid");
  });
}

json report_to_json(const Analysis& a) {
  json deadlocks = json::array();
  for (const auto& p : a.deadlocks) deadlocks.push_back(position_to_json(p));
  std::sort(deadlocks.begin(), deadlocks.end(),
            [](const json& x, const json& y) { return x.dump() < y.dump(); });
  json out;
  out["conservative"] = true;
  out["delta"] = consumption_to_json(a.delta);
  out["positions"] = a.position_count;
  out["forbidden"] = region_to_json(a.forbidden);
  out["fundamental"] = region_to_json(a.fundamental);
  out["deadlocks"] = std::move(deadlocks);
  out["unroll"] = a.unroll ? json(*a.unroll) : json(nullptr);
  return out;
}

}  // namespace synreg
