#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "synreg/errors.hpp"

namespace synreg {

// A bounded lattice that can describe the complement of a principal up-set
// or down-set by finitely many generators.
//
//   lower_generators(p)  = maximal points not above p
//   upper_generators(p)  = minimal points not below p
//   is_finitely_lower_complemented(p) holds when the points not above p are
//   exactly the downward closure of lower_generators(p).
//
// Upper generator sets are assumed to always generate (the posets we use are
// well-orders). Points need a structural total order for deduplication and a
// to_string found by ADL for diagnostics.
template <class X>
concept PosetContract = requires(const X& poset, const typename X::Point& a,
                                 const typename X::Point& b) {
  requires std::totally_ordered<typename X::Point>;
  { poset.bottom() } -> std::convertible_to<typename X::Point>;
  { poset.top() } -> std::convertible_to<typename X::Point>;
  { poset.leq(a, b) } -> std::same_as<bool>;
  { poset.join(a, b) } -> std::convertible_to<typename X::Point>;
  { poset.meet(a, b) } -> std::convertible_to<typename X::Point>;
  { poset.lower_generators(a) } -> std::convertible_to<std::vector<typename X::Point>>;
  { poset.upper_generators(a) } -> std::convertible_to<std::vector<typename X::Point>>;
  { poset.is_finitely_lower_complemented(a) } -> std::same_as<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

// A finite contract that can list all of its points (used by oracles).
template <class X>
concept EnumerablePoset = PosetContract<X> && requires(const X& poset) {
  { poset.enumerate() } -> std::convertible_to<std::vector<typename X::Point>>;
};

// Closed interval [low, high]; low <= high is checked by make_interval.
template <class Point>
struct Interval {
  Point low;
  Point high;

  friend auto operator<=>(const Interval&, const Interval&) = default;
  friend bool operator==(const Interval&, const Interval&) = default;
};

template <class Point>
std::string to_string(const Interval<Point>& i) {
  return "[" + to_string(i.low) + ", " + to_string(i.high) + "]";
}

// A finite set of intervals, kept sorted and duplicate-free so that equality
// is set equality.
template <class Point>
class Region {
 public:
  using value_type = Interval<Point>;

  Region() = default;
  Region(std::initializer_list<Interval<Point>> intervals)
      : Region(std::vector<Interval<Point>>(intervals)) {}
  explicit Region(std::vector<Interval<Point>> intervals) : intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end());
    intervals_.erase(std::unique(intervals_.begin(), intervals_.end()), intervals_.end());
  }

  const std::vector<Interval<Point>>& intervals() const { return intervals_; }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  bool contains_interval(const Interval<Point>& i) const {
    return std::binary_search(intervals_.begin(), intervals_.end(), i);
  }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Interval<Point>> intervals_;
};

template <PosetContract X>
using RegionOf = Region<typename X::Point>;

template <PosetContract X>
using IntervalOf = Interval<typename X::Point>;

template <PosetContract X>
IntervalOf<X> make_interval(const X& poset, typename X::Point low, typename X::Point high) {
  if (!poset.leq(low, high))
    throw Error("not an interval: " + to_string(low) + " is not below " + to_string(high));
  return {std::move(low), std::move(high)};
}

template <PosetContract X>
bool contains(const X& poset, const IntervalOf<X>& i, const typename X::Point& z) {
  return poset.leq(i.low, z) && poset.leq(z, i.high);
}

// [i] is included in [j].
template <PosetContract X>
bool is_subinterval(const X& poset, const IntervalOf<X>& i, const IntervalOf<X>& j) {
  return poset.leq(j.low, i.low) && poset.leq(i.high, j.high);
}

template <PosetContract X>
bool member(const X& poset, const RegionOf<X>& r, const typename X::Point& z) {
  return std::any_of(r.begin(), r.end(), [&](const auto& i) { return contains(poset, i, z); });
}

// Every interval of r lies inside some interval of s.
template <PosetContract X>
bool preceq(const X& poset, const RegionOf<X>& r, const RegionOf<X>& s) {
  return std::all_of(r.begin(), r.end(), [&](const auto& i) {
    return std::any_of(s.begin(), s.end(), [&](const auto& j) { return is_subinterval(poset, i, j); });
  });
}

// r <= s: r is covered by s, and if s is also covered by r then s is a
// subset of r.
template <PosetContract X>
bool region_leq(const X& poset, const RegionOf<X>& r, const RegionOf<X>& s) {
  if (!preceq(poset, r, s)) return false;
  if (!preceq(poset, s, r)) return true;
  return std::all_of(s.begin(), s.end(), [&](const auto& j) { return r.contains_interval(j); });
}

template <PosetContract X>
RegionOf<X> unite(const X&, const RegionOf<X>& r, const RegionOf<X>& s) {
  std::vector<IntervalOf<X>> all(r.begin(), r.end());
  all.insert(all.end(), s.begin(), s.end());
  return RegionOf<X>(std::move(all));
}

// Drops every interval strictly contained in another one. Supports are
// unchanged.
template <PosetContract X>
RegionOf<X> maximal_intervals(const X& poset, const RegionOf<X>& r) {
  const auto& in = r.intervals();
  std::vector<IntervalOf<X>> out;
  for (std::size_t k = 0; k < in.size(); ++k) {
    bool dominated = false;
    for (std::size_t m = 0; m < in.size() && !dominated; ++m)
      dominated = m != k && is_subinterval(poset, in[k], in[m]);
    if (!dominated) out.push_back(in[k]);
  }
  return RegionOf<X>(std::move(out));
}

// Pairwise intersections (x v x', y ^ y'), kept when nonempty.
template <PosetContract X>
RegionOf<X> intersect(const X& poset, const RegionOf<X>& r, const RegionOf<X>& s) {
  std::vector<IntervalOf<X>> out;
  for (const auto& i : r) {
    for (const auto& j : s) {
      auto low = poset.join(i.low, j.low);
      auto high = poset.meet(i.high, j.high);
      if (poset.leq(low, high)) out.push_back({std::move(low), std::move(high)});
    }
  }
  return RegionOf<X>(std::move(out));
}

// Region covering the points outside [i]: everything not above i.low or not
// below i.high.
template <PosetContract X>
RegionOf<X> interval_complement(const X& poset, const IntervalOf<X>& i) {
  if (!poset.is_finitely_lower_complemented(i.low))
    throw NotFinitelyComplemented("the points not above " + to_string(i.low) +
                                  " have no finite set of maximal generators (interval " +
                                  to_string(i) + ")");
  std::vector<IntervalOf<X>> out;
  for (auto& y : poset.lower_generators(i.low)) out.push_back({poset.bottom(), std::move(y)});
  for (auto& x : poset.upper_generators(i.high)) out.push_back({std::move(x), poset.top()});
  return RegionOf<X>(std::move(out));
}

// Complement of a region, as the intersection over its intervals of the
// interval complements. The empty intersection is the whole space. The result
// is reduced to its maximal intervals; intervals dropped along the way are
// contained in kept ones, so the support is exact.
//
// Every low endpoint is checked for finite lower complementation before any
// work is done.
template <PosetContract X>
RegionOf<X> complement(const X& poset, const RegionOf<X>& r) {
  for (const auto& i : r)
    if (!poset.is_finitely_lower_complemented(i.low))
      throw NotFinitelyComplemented("the points not above " + to_string(i.low) +
                                    " have no finite set of maximal generators (interval " +
                                    to_string(i) + ")");
  RegionOf<X> acc{IntervalOf<X>{poset.bottom(), poset.top()}};
  for (const auto& i : r) {
    acc = maximal_intervals(poset, intersect(poset, acc, interval_complement(poset, i)));
    if (acc.empty()) break;
  }
  return acc;
}

// The normal form: maximal intervals of the double complement.
template <PosetContract X>
RegionOf<X> normalize(const X& poset, const RegionOf<X>& r) {
  return maximal_intervals(poset, complement(poset, complement(poset, r)));
}

// Same support, decided on normal forms.
template <PosetContract X>
bool equivalent(const X& poset, const RegionOf<X>& r, const RegionOf<X>& s) {
  return normalize(poset, r) == normalize(poset, s);
}

// Points of a finite poset that lie in the region.
template <EnumerablePoset X>
std::vector<typename X::Point> support(const X& poset, const RegionOf<X>& r) {
  std::vector<typename X::Point> out;
  for (auto& z : poset.enumerate())
    if (member(poset, r, z)) out.push_back(std::move(z));
  return out;
}

// All inclusion-maximal intervals contained in `ys`, found by exhaustive
// search over the points of a finite poset. Uses only the order relation.
template <EnumerablePoset X>
RegionOf<X> brute_force_normal(const X& poset, const std::vector<typename X::Point>& ys) {
  const std::vector<typename X::Point> pts = poset.enumerate();
  const std::size_t n = pts.size();
  std::vector<typename X::Point> sorted_ys(ys);
  std::sort(sorted_ys.begin(), sorted_ys.end());
  std::vector<char> in_y(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    in_y[a] = std::binary_search(sorted_ys.begin(), sorted_ys.end(), pts[a]);
  std::vector<char> le(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a * n + b] = poset.leq(pts[a], pts[b]);

  // inside[a*n+b]: a <= b and every point of [a, b] is in ys
  std::vector<char> inside(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!in_y[a]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!le[a * n + b]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < n && ok; ++z)
        if (le[a * n + z] && le[z * n + b] && !in_y[z]) ok = false;
      inside[a * n + b] = ok;
    }
  }
  // [a, b] is maximal iff it can be widened at neither end.
  std::vector<IntervalOf<X>> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!inside[a * n + b]) continue;
      bool maximal = true;
      for (std::size_t c = 0; c < n && maximal; ++c) {
        if (c != a && le[c * n + a] && inside[c * n + b]) maximal = false;
        if (c != b && le[b * n + c] && inside[a * n + c]) maximal = false;
      }
      if (maximal) out.push_back({pts[a], pts[b]});
    }
  }
  return RegionOf<X>(std::move(out));
}

}  // namespace synreg
