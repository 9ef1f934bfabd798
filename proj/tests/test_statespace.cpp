#include <doctest.h>

#include "oracles.hpp"
#include "synreg/errors.hpp"
#include "synreg/program_poset.hpp"
#include "synreg/statespace.hpp"

using namespace synreg;

namespace {

const Position B = Position::bot();
const Position T = Position::top();
Position S(Position l, Position r) { return Position::seq(std::move(l), std::move(r)); }
Position Pr(Position l, Position r) { return Position::par(std::move(l), std::move(r)); }

const char* kSwiss = "(P(a);P(b);w1;V(b);V(a)) || (P(b);P(a);w2;V(a);V(b))";

std::vector<Position> where(const Program& prog, bool valid) {
  std::vector<Position> out;
  for (const auto& p : enumerate_positions(prog))
    if (is_valid_state(prog, p) == valid) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("state graph examples") {
  StateGraph a = build_state_graph(parse_program("A"));
  CHECK(a.vertices().size() == 2);
  CHECK(a.edges().size() == 1);
  CHECK(a.edges()[0].valid);

  StateGraph ab = build_state_graph(parse_program("A||B"));
  CHECK(ab.vertices().size() == 6);
  CHECK(ab.edges().size() == 6);
  for (const auto& e : ab.edges()) CHECK(e.valid);

  Program swiss = parse_program(kSwiss);
  StateGraph g = build_state_graph(swiss);
  CHECK(g.vertices().size() == 198);
  Position corner = Pr(S(T, S(B, B)), S(T, S(B, B)));
  auto at = g.index_of(corner);
  REQUIRE(at);
  CHECK(g.is_valid(*at));
  std::size_t out = 0;
  for (const auto& e : g.edges())
    if (e.from == *at) {
      ++out;
      CHECK_FALSE(e.valid);
    }
  CHECK(out == 2);
  // every non-top vertex of the unpruned graph can move
  std::vector<char> moves(g.vertices().size(), 0);
  for (const auto& e : g.edges()) moves[e.from] = 1;
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    CHECK(moves[i] == !g.vertices()[i].is_top());

  CHECK_THROWS_AS(build_state_graph(parse_program("P(a)*")), NonConservative);
  CHECK_THROWS_AS(build_state_graph(parse_program("A*")), UnboundedLoop);
  CHECK(build_state_graph(parse_program("A*"), 2).vertices().size() == 8);
}

TEST_CASE("swiss flag regions") {
  Program swiss = parse_program(kSwiss);
  ProgramPoset poset(swiss);
  auto forbidden = forbidden_region(swiss);
  auto fundamental = fundamental_region(swiss);
  CHECK(forbidden == brute_force_normal(poset, where(swiss, false)));
  CHECK(fundamental == brute_force_normal(poset, where(swiss, true)));
  CHECK(forbidden.size() == 2);
  CHECK(fundamental.size() == 8);
  for (const auto& p : enumerate_positions(swiss)) {
    bool bad = member(poset, forbidden, p);
    CHECK(bad == !is_valid_state(swiss, p));
    CHECK(member(poset, fundamental, p) == !bad);
  }
  // one box per mutex: the positions where both threads hold it
  PositionRegion expected{
      {Pr(S(T, B), S(T, S(T, B))), Pr(S(T, S(T, S(T, S(T, B)))), S(T, S(T, S(T, S(B, B)))))},
      {Pr(S(T, S(T, B)), S(T, B)), Pr(S(T, S(T, S(T, S(B, B)))), S(T, S(T, S(T, S(T, B)))))}};
  CHECK(forbidden == expected);
}

TEST_CASE("deadlocks") {
  Program swiss = parse_program(kSwiss);
  auto found = find_deadlocks(swiss);
  CHECK(found == oracle::deadlocks(swiss));
  CHECK(found == std::vector<Position>{Pr(S(T, S(B, B)), S(T, S(B, B)))});
  CHECK(find_deadlocks(parse_program("A;B")).empty());

  Program twice = parse_program("P(a) || P(a)");
  CHECK(find_deadlocks(twice) == oracle::deadlocks(twice));
  CHECK(find_deadlocks(twice) == std::vector<Position>{Pr(B, T), Pr(T, B)});

  oracle::ProgramGenerator gen(31, false);
  int tested = 0;
  while (tested < 300) {
    Program p = gen(6);
    if (!is_conservative(p)) continue;
    auto d = find_deadlocks(p);
    CHECK_MESSAGE(d == oracle::deadlocks(p), print_program(p));
    StateGraph g = build_state_graph(p);
    auto pruned = g.pruned_edges();
    for (const auto& x : d) {
      std::size_t i = *g.index_of(x);
      bool in = x.is_bot(), out = false;
      for (const auto& e : pruned) {
        in = in || e.to == i;
        out = out || e.from == i;
      }
      CHECK(in);
      CHECK_FALSE(out);
    }
    ++tested;
  }
}

TEST_CASE("small program regions") {
  Program ab = parse_program("A;B");
  CHECK(forbidden_region(ab).empty());
  CHECK(fundamental_region(ab) == PositionRegion{{B, T}});
  CHECK(fundamental_region(parse_program("P(a);V(a)")) == PositionRegion{{B, T}});
  CHECK(forbidden_region(parse_program("P(a) || P(a)")) == PositionRegion{{Pr(T, T), T}});
  CHECK_THROWS_AS(forbidden_region(parse_program("P(a)*")), NonConservative);
  CHECK_THROWS_AS(forbidden_region(parse_program("(P(a);V(a))*")), UnboundedLoop);
  CHECK(fundamental_region(parse_program("(P(a);V(a))*"), 2) == PositionRegion{{B, T}});
}

TEST_CASE("regions partition positions of generated programs") {
  oracle::ProgramGenerator gen(37, true);
  int tested = 0;
  while (tested < 150) {
    Program p = gen(5);
    if (!is_conservative(p)) continue;
    Program flat = analyzed_program(p, 2);
    if (enumerate_positions(flat).size() > 250) continue;
    ProgramPoset poset(flat);
    auto forbidden = forbidden_region(p, 2);
    auto fundamental = fundamental_region(p, 2);
    CHECK(forbidden == brute_force_normal(poset, where(flat, false)));
    CHECK(fundamental == brute_force_normal(poset, where(flat, true)));
    ++tested;
  }
}

TEST_CASE("unrolling") {
  Program a = parse_program("A");
  CHECK(unroll_loops(parse_program("A*"), 0) == Program::action("skip"));
  CHECK(unroll_loops(parse_program("A*"), 2) ==
        Program::choice(Program::action("skip"),
                        Program::seq(a, Program::choice(Program::action("skip"), a))));
  CHECK(unroll_loops(parse_program("skip;A*"), 0) ==
        Program::seq(Program::action("skip"), Program::action("skip1")));
  Program flat = parse_program("(A||B);C+D");
  CHECK(unroll_loops(flat, 3) == flat);
  CHECK_FALSE(unroll_loops(parse_program("(A*;B)*"), 3).has_loop());
  CHECK_THROWS_AS(analyzed_program(parse_program("A*")), UnboundedLoop);
}

TEST_CASE("execution validation") {
  CHECK(validate_execution(parse_program("A"), {}));
  Program twice = parse_program("P(a);P(a)");
  for (const auto& run : oracle::total_executions(twice)) CHECK_FALSE(validate_execution(twice, run));

  Program swiss = parse_program(kSwiss);
  // thread 2 to completion, then thread 1
  Path run;
  Position at = B;
  while (!at.is_top()) {
    auto nexts = successors(swiss, at);
    Position next = nexts.front();
    for (const auto& n : nexts)
      if (n.kind() == Position::Kind::Par && at.kind() == Position::Kind::Par &&
          n.left() == at.left())
        next = n;
    run.push_back({at, next});
    at = next;
  }
  CHECK(std::any_of(run.begin(), run.end(), [](const Step& s) { return s.to == Pr(B, T); }));
  CHECK(validate_execution(swiss, run));

  CHECK_THROWS_AS(validate_execution(swiss, {{Pr(B, B), T}}), InvalidPath);
}

TEST_CASE("random executions: prefix validity iff visited positions valid") {
  oracle::ProgramGenerator gen(41, true);
  int tested = 0, invalid = 0;
  while (tested < 500) {
    Program p = gen(6);
    if (!is_conservative(p)) continue;
    for (int k = 0; k < 3; ++k) {
      Path run = oracle::random_execution(p, gen.rng());
      if (run.size() > 400) continue;
      bool visited_ok = std::all_of(run.begin(), run.end(),
                                    [&](const Step& s) { return is_valid_state(p, s.to); });
      bool ok = validate_execution(p, run);
      CHECK_MESSAGE(ok == visited_ok, print_program(p));
      invalid += !ok;
    }
    ++tested;
  }
  CHECK(invalid > 100);
}
