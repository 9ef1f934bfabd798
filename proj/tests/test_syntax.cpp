#include <doctest.h>

#include "oracles.hpp"
#include "synreg/errors.hpp"
#include "synreg/program.hpp"

using namespace synreg;

namespace {

Program A(const char* n) { return Program::action(n); }

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_program("P(a) ; V(a)") == Program::seq(Program::lock("a"), Program::unlock("a")));

  Program swiss = parse_program("(P(a);P(b);w1;V(b);V(a)) || (P(b);P(a);w2;V(a);V(b))");
  REQUIRE(swiss.kind() == Program::Kind::Par);
  auto chain = [](const Program& t, std::vector<Program> items) {
    const Program* at = &t;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      REQUIRE(at->kind() == Program::Kind::Seq);
      CHECK(at->left() == items[i]);
      at = &at->right();
    }
    CHECK(*at == items.back());
  };
  chain(swiss.left(), {Program::lock("a"), Program::lock("b"), A("w1"), Program::unlock("b"),
                       Program::unlock("a")});
  chain(swiss.right(), {Program::lock("b"), Program::lock("a"), A("w2"), Program::unlock("a"),
                        Program::unlock("b")});
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_program("A;B||C") == Program::par(Program::seq(A("A"), A("B")), A("C")));
  CHECK(parse_program("A;B*") == Program::seq(A("A"), Program::loop(A("B"))));
  CHECK(parse_program("A;B+C") == Program::choice(Program::seq(A("A"), A("B")), A("C")));
  CHECK(parse_program("A+B||C+D") ==
        Program::par(Program::choice(A("A"), A("B")), Program::choice(A("C"), A("D"))));
  CHECK(parse_program("A;B;C") == Program::seq(A("A"), Program::seq(A("B"), A("C"))));
  CHECK(parse_program("A||B||C") == Program::par(A("A"), Program::par(A("B"), A("C"))));
  CHECK(parse_program("A**") == Program::loop(Program::loop(A("A"))));
  CHECK(parse_program("(A;B)*") == Program::loop(Program::seq(A("A"), A("B"))));
  CHECK(parse_program("  A # comment\n ; \"x:=y+1\"") ==
        Program::seq(A("A"), A("x:=y+1")));
}

TEST_CASE("print examples") {
  CHECK(print_program(Program::seq(Program::lock("a"), Program::unlock("a"))) == "P(a) ; V(a)");
  CHECK(print_program(Program::loop(A("A"))) == "A*");
  CHECK(print_program(Program::choice(Program::lock("a"), Program::lock("b"))) == "P(a) + P(b)");
  CHECK(print_program(Program::seq(Program::seq(A("A"), A("B")), A("C"))) == "(A ; B) ; C");
  CHECK(print_program(Program::loop(Program::choice(A("A"), A("B")))) == "(A + B)*");
  CHECK(print_program(A("x:=y+1")) == "\"x:=y+1\"");
  CHECK(print_program(A("P")) == "\"P\"");
}

TEST_CASE("mutexes_of") {
  CHECK(mutexes_of(parse_program("P(a);(P(a) || V(b))")) == std::set<std::string>{"a", "b"});
  CHECK(mutexes_of(parse_program("A;B")).empty());
  CHECK(mutexes_of(parse_program("(P(a);P(b);w1;V(b);V(a)) || (P(b);P(a);w2;V(a);V(b))")) ==
        std::set<std::string>{"a", "b"});
}

TEST_CASE("syntax errors") {
  auto column_of = [](const char* text) {
    try {
      parse_program(text);
    } catch (const SyntaxError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  CHECK_THROWS_AS(parse_program("P(a"), SyntaxError);
  CHECK_THROWS_AS(parse_program(""), SyntaxError);
  CHECK_THROWS_AS(parse_program("  # only a comment\n"), SyntaxError);
  CHECK_THROWS_AS(parse_program("A;"), SyntaxError);
  CHECK_THROWS_AS(parse_program("A B"), SyntaxError);
  CHECK_THROWS_AS(parse_program("(A"), SyntaxError);
  CHECK_THROWS_AS(parse_program("A)"), SyntaxError);
  CHECK_THROWS_AS(parse_program("P()"), SyntaxError);
  CHECK_THROWS_AS(parse_program("\"unterminated"), SyntaxError);
  CHECK(column_of("A;\n  ;B") == std::make_pair(std::size_t{2}, std::size_t{3}));
}

TEST_CASE("round trip on generated programs") {
  oracle::ProgramGenerator gen(7);
  for (int i = 0; i < 2000; ++i) {
    Program p = gen(10);
    std::string text = print_program(p);
    Program back = parse_program(text);
    CHECK_MESSAGE(back == p, text);
    CHECK(print_program(back) == text);
  }
}
