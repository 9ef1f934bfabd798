#include <doctest.h>

#include "oracles.hpp"
#include "synreg/errors.hpp"

using namespace synreg;

namespace {

const Position B = Position::bot();
const Position T = Position::top();
Position S(Position l, Position r) { return Position::seq(std::move(l), std::move(r)); }
Position Pr(Position l, Position r) { return Position::par(std::move(l), std::move(r)); }

const char* kSwiss = "(P(a);P(b);w1;V(b);V(a)) || (P(b);P(a);w2;V(a);V(b))";

// Consumption assigned by a BFS tree from bot; returns false if some edge
// disagrees, i.e. two paths to the same position consume differently.
bool path_independent(const Program& prog, std::uint64_t bound,
                      std::unordered_map<Position, ConsumptionMap>& at) {
  auto e = oracle::explore(prog, bound);
  at.clear();
  at[B] = {};
  std::deque<std::size_t> queue{e.at(B)};
  bool ok = true;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : e.next[i]) {
      ConsumptionMap c = at[e.pts[i]] + step_consumption(prog, {e.pts[i], e.pts[j]});
      auto [it, fresh] = at.emplace(e.pts[j], c);
      if (fresh)
        queue.push_back(j);
      else if (!(it->second == c))
        ok = false;
    }
  }
  return ok;
}

}  // namespace

TEST_CASE("consumption maps") {
  ConsumptionMap m{{"a", 2}, {"b", -1}, {"c", 0}};
  CHECK(m["a"] == 2);
  CHECK(m["c"] == 0);
  CHECK(m.entries().size() == 2);
  CHECK((m + -m).is_zero());
  CHECK(to_string(m) == "{a: 2, b: -1}");
  CHECK_FALSE(m.within_mutex_bounds());
  CHECK(ConsumptionMap{{"a", 1}}.within_mutex_bounds());
}

TEST_CASE("program consumption example") {
  Program p = parse_program("P(a);(P(a) || V(b))");
  auto delta = delta_program(p);
  REQUIRE(delta);
  CHECK(*delta == ConsumptionMap{{"a", 2}, {"b", -1}});
  auto runs = oracle::total_executions(p);
  CHECK(runs.size() == 2);  // two interleavings of the parallel part
  for (const auto& run : runs) CHECK(path_consumption(p, run) == *delta);

  CHECK_FALSE(delta_program(parse_program("P(a)*")));
  CHECK_FALSE(delta_program(parse_program("P(a) + P(b)")));
  CHECK(delta_program(parse_program("P(a) + P(a)")) == ConsumptionMap{{"a", 1}});
  CHECK(delta_program(parse_program("(P(a);V(a))*")) == ConsumptionMap{});
}

TEST_CASE("path consumption") {
  Program v = parse_program("V(a)");
  CHECK(path_consumption(v, {}).is_zero());
  CHECK(path_consumption(v, {{B, T}}) == ConsumptionMap{{"a", -1}});
  Program ab = parse_program("P(a);V(a)");
  CHECK_THROWS_AS(path_consumption(ab, {{B, S(B, B)}, {S(T, B), S(T, T)}}), InvalidPath);
  CHECK_THROWS_AS(path_consumption(ab, {{B, T}}), InvalidPath);
  // monoid action: consumption of a concatenation is the sum
  Path first{{B, S(B, B)}, {S(B, B), S(T, B)}};
  Path second{{S(T, B), S(T, S(B, B))}};
  Program longer = parse_program("P(a);P(b);V(b)");
  Path whole = first;
  whole.insert(whole.end(), second.begin(), second.end());
  CHECK(path_consumption(longer, whole) ==
        path_consumption(longer, first) + path_consumption(longer, second));
}

TEST_CASE("conservativity") {
  Program swiss = parse_program(kSwiss);
  CHECK(is_conservative(swiss));
  CHECK(delta_program(swiss)->is_zero());
  CHECK(is_conservative(parse_program("A;B")));
  CHECK(delta_program(parse_program("A;B"))->is_zero());
  CHECK_FALSE(is_conservative(parse_program("P(a)*")));
  CHECK(print_program(*non_conservative_subterm(parse_program("A;(B||P(a)*)"))) == "P(a)*");
  CHECK(print_program(*non_conservative_subterm(parse_program("(P(a)+P(b))*"))) ==
        "P(a) + P(b)");
  CHECK_FALSE(non_conservative_subterm(swiss));
  CHECK_THROWS_AS(require_conservative(parse_program("P(a)*")), NonConservative);
  try {
    require_conservative(parse_program("P(a)*"));
  } catch (const NonConservative& e) {
    CHECK(std::string(e.what()) == "non-conservative at P(a)*");
  }
  std::unordered_map<Position, ConsumptionMap> at;
  CHECK(path_independent(swiss, 0, at));
}

TEST_CASE("position consumption and validity examples") {
  Program swiss = parse_program(kSwiss);
  Position t1a = S(T, S(B, B));  // thread past its first lock
  CHECK(position_consumption(swiss, B).is_zero());
  CHECK(position_consumption(swiss, T).is_zero());
  CHECK(position_consumption(swiss, Pr(t1a, t1a)) == ConsumptionMap{{"a", 1}, {"b", 1}});
  CHECK(is_valid_state(swiss, Pr(t1a, t1a)));
  Position t2ba = S(T, S(T, S(B, B)));
  CHECK(position_consumption(swiss, Pr(t1a, t2ba)) == ConsumptionMap{{"a", 2}, {"b", 1}});
  CHECK_FALSE(is_valid_state(swiss, Pr(t1a, t2ba)));
  CHECK(is_valid_state(swiss, B));
  CHECK_FALSE(is_valid_state(parse_program("V(a)"), T));
  CHECK(position_consumption(parse_program("P(a);(P(a) || V(b))"), T) ==
        ConsumptionMap{{"a", 2}, {"b", -1}});
  CHECK_THROWS_AS(position_consumption(parse_program("P(a)*"), B), NonConservative);
  CHECK_THROWS_AS(position_consumption(swiss, S(B, B)), InvalidPosition);
}

TEST_CASE("structural consumption equals path consumption on generated programs") {
  oracle::ProgramGenerator gen(5);
  int tested = 0;
  while (tested < 300) {
    Program p = gen(6);
    if (!is_conservative(p)) continue;
    std::unordered_map<Position, ConsumptionMap> at;
    CHECK_MESSAGE(path_independent(p, 2, at), print_program(p));
    for (const auto& [pos, c] : at) {
      CHECK_MESSAGE(position_consumption(p, pos) == c, print_program(p), " @ ", to_string(pos));
      CHECK(is_valid_state(p, pos) == c.within_mutex_bounds());
    }
    if (!p.has_loop()) CHECK(at.at(T) == *delta_program(p));
    ++tested;
  }
}
