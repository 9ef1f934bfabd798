#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace synreg {

struct GridPoint {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// "(1,5)"
std::string to_string(const GridPoint& p);

// The product of chains [0,n_1] x ... x [0,n_d] with the componentwise order.
// Every point is finitely complemented, which makes grids a cheap substrate
// for checking the region algebra.
class Grid {
 public:
  using Point = GridPoint;

  // Throws Error on an empty bound list or a negative bound.
  explicit Grid(std::vector<std::int64_t> bounds);

  const std::vector<std::int64_t>& bounds() const { return bounds_; }
  std::size_t dimension() const { return bounds_.size(); }
  bool contains(const Point& p) const;

  Point bottom() const;
  Point top() const;
  bool leq(const Point& a, const Point& b) const;
  Point join(const Point& a, const Point& b) const;
  Point meet(const Point& a, const Point& b) const;
  // One generator per axis where p is above zero: p with that coordinate
  // decreased by one and every other coordinate at its bound.
  std::vector<Point> lower_generators(const Point& p) const;
  std::vector<Point> upper_generators(const Point& p) const;
  bool is_finitely_lower_complemented(const Point&) const { return true; }
  std::vector<Point> enumerate() const;

 private:
  std::vector<std::int64_t> bounds_;
};

Grid make_grid(std::vector<std::int64_t> bounds);

}  // namespace synreg
