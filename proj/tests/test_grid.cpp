#include <doctest.h>

#include <algorithm>

#include "synreg/errors.hpp"
#include "synreg/grid.hpp"

using namespace synreg;

namespace {

GridPoint G(std::initializer_list<std::int64_t> c) { return GridPoint{c}; }

std::vector<GridPoint> sorted(std::vector<GridPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// max{x : x not above p} and min{x : x not below p} by exhaustive search
std::pair<std::vector<GridPoint>, std::vector<GridPoint>> brute(const Grid& g,
                                                                const std::vector<GridPoint>& all,
                                                                const GridPoint& p) {
  std::vector<GridPoint> lo, hi;
  for (const auto& x : all) {
    if (!g.leq(p, x)) {
      bool maximal = std::none_of(all.begin(), all.end(), [&](const GridPoint& y) {
        return y != x && !g.leq(p, y) && g.leq(x, y);
      });
      if (maximal) lo.push_back(x);
    }
    if (!g.leq(x, p)) {
      bool minimal = std::none_of(all.begin(), all.end(), [&](const GridPoint& y) {
        return y != x && !g.leq(y, p) && g.leq(y, x);
      });
      if (minimal) hi.push_back(x);
    }
  }
  return {sorted(lo), sorted(hi)};
}

}  // namespace

TEST_CASE("grid generator examples") {
  Grid g = make_grid({5, 5});
  CHECK(sorted(g.lower_generators(G({2, 2}))) == sorted({G({1, 5}), G({5, 1})}));
  CHECK(g.lower_generators(g.bottom()).empty());
  CHECK(sorted(g.upper_generators(G({3, 3}))) == sorted({G({4, 0}), G({0, 4})}));
  CHECK(g.upper_generators(g.top()).empty());
  CHECK(g.join(G({1, 4}), G({3, 2})) == G({3, 4}));
  CHECK(g.meet(G({1, 4}), G({3, 2})) == G({1, 2}));
  CHECK(g.enumerate().size() == 36);
  CHECK(to_string(G({1, 5})) == "(1,5)");
}

TEST_CASE("grid construction errors") {
  CHECK_THROWS_AS(make_grid({}), Error);
  CHECK_THROWS_AS(make_grid({3, -1}), Error);
}

TEST_CASE("grid generators agree with brute force") {
  std::vector<std::vector<std::int64_t>> shapes{{0}, {4}, {5, 5}, {2, 3, 1}, {3, 3, 3}, {5, 5, 5},
                                                {2, 2, 2, 2}};
  for (const auto& bounds : shapes) {
    Grid g = make_grid(bounds);
    auto all = g.enumerate();
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto [lo, hi] = brute(g, all, all[i]);
      CHECK_MESSAGE(sorted(g.lower_generators(all[i])) == lo, to_string(all[i]));
      CHECK_MESSAGE(sorted(g.upper_generators(all[i])) == hi, to_string(all[i]));
    }
  }
}

// In a product of chains x is maximal in a set iff none of its upper covers
// is in the set, which makes the exhaustive 6^4 check affordable.
TEST_CASE("grid generators agree with cover-based search on 6^4") {
  Grid g = make_grid({5, 5, 5, 5});
  auto all = g.enumerate();
  auto shifted = [](GridPoint x, std::size_t i, int by) {
    x.coords[i] += by;
    return x;
  };
  for (const auto& p : all) {
    std::vector<GridPoint> lo, hi;
    for (const auto& x : all) {
      bool lo_max = !g.leq(p, x), hi_min = !g.leq(x, p);
      for (std::size_t i = 0; i < 4; ++i) {
        if (lo_max && x.coords[i] < 5 && !g.leq(p, shifted(x, i, 1))) lo_max = false;
        if (hi_min && x.coords[i] > 0 && !g.leq(shifted(x, i, -1), p)) hi_min = false;
      }
      if (lo_max) lo.push_back(x);
      if (hi_min) hi.push_back(x);
    }
    CHECK(sorted(g.lower_generators(p)) == lo);
    CHECK(sorted(g.upper_generators(p)) == hi);
  }
}
