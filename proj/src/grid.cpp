#include "synreg/grid.hpp"

#include <algorithm>

#include "synreg/errors.hpp"

namespace synreg {

std::string to_string(const GridPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.coords[i]);
  }
  return out + ")";
}

Grid::Grid(std::vector<std::int64_t> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw Error("a grid needs at least one axis");
  for (auto b : bounds_)
    if (b < 0) throw Error("grid bounds must be nonnegative");
}

bool Grid::contains(const Point& p) const {
  if (p.coords.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < bounds_.size(); ++i)
    if (p.coords[i] < 0 || p.coords[i] > bounds_[i]) return false;
  return true;
}

GridPoint Grid::bottom() const { return {std::vector<std::int64_t>(bounds_.size(), 0)}; }

GridPoint Grid::top() const { return {bounds_}; }

bool Grid::leq(const Point& a, const Point& b) const {
  for (std::size_t i = 0; i < bounds_.size(); ++i)
    if (a.coords[i] > b.coords[i]) return false;
  return true;
}

GridPoint Grid::join(const Point& a, const Point& b) const {
  GridPoint out = a;
  for (std::size_t i = 0; i < bounds_.size(); ++i)
    out.coords[i] = std::max(a.coords[i], b.coords[i]);
  return out;
}

GridPoint Grid::meet(const Point& a, const Point& b) const {
  GridPoint out = a;
  for (std::size_t i = 0; i < bounds_.size(); ++i)
    out.coords[i] = std::min(a.coords[i], b.coords[i]);
  return out;
}

std::vector<GridPoint> Grid::lower_generators(const Point& p) const {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (p.coords[i] == 0) continue;
    GridPoint g = top();
    g.coords[i] = p.coords[i] - 1;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GridPoint> Grid::upper_generators(const Point& p) const {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (p.coords[i] == bounds_[i]) continue;
    GridPoint g = bottom();
    g.coords[i] = p.coords[i] + 1;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GridPoint> Grid::enumerate() const {
  // lexicographic order is a linear extension of the product order
  std::vector<GridPoint> out;
  GridPoint p = bottom();
  for (;;) {
    out.push_back(p);
    std::size_t i = bounds_.size();
    while (i > 0) {
      --i;
      if (p.coords[i] < bounds_[i]) {
        ++p.coords[i];
        break;
      }
      p.coords[i] = 0;
      if (i == 0) return out;
    }
  }
}

Grid make_grid(std::vector<std::int64_t> bounds) { return Grid(std::move(bounds)); }

}  // namespace synreg
