#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synreg/position.hpp"
#include "synreg/program.hpp"

namespace synreg {

// The positions of a program as a region substrate. Operations assume their
// arguments are positions of the program; use check() on untrusted input.
class ProgramPoset {
 public:
  using Point = Position;

  explicit ProgramPoset(Program program, std::optional<std::uint64_t> max_iterations = {})
      : program_(std::move(program)), max_iterations_(max_iterations) {}

  const Program& program() const { return program_; }

  Point bottom() const { return Position::bot(); }
  Point top() const { return Position::top(); }
  bool leq(const Point& a, const Point& b) const;
  Point join(const Point& a, const Point& b) const;
  Point meet(const Point& a, const Point& b) const;
  std::vector<Point> lower_generators(const Point& p) const;
  std::vector<Point> upper_generators(const Point& p) const;
  bool is_finitely_lower_complemented(const Point& p) const;
  // Throws UnboundedLoop for a program with loops built without a bound.
  std::vector<Point> enumerate() const;

  // Throws InvalidPosition if p is not a position of the program.
  void check(const Point& p) const;

 private:
  Program program_;
  std::optional<std::uint64_t> max_iterations_;
};

}  // namespace synreg
