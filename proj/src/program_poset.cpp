#include "synreg/program_poset.hpp"

#include "synreg/errors.hpp"
#include "synreg/positions.hpp"

namespace synreg {

bool ProgramPoset::leq(const Point& a, const Point& b) const { return order::leq(a, b); }

Position ProgramPoset::join(const Point& a, const Point& b) const { return order::join(a, b); }

Position ProgramPoset::meet(const Point& a, const Point& b) const { return order::meet(a, b); }

std::vector<Position> ProgramPoset::lower_generators(const Point& p) const {
  return order::lower_generators(program_, p);
}

std::vector<Position> ProgramPoset::upper_generators(const Point& p) const {
  return order::upper_generators(program_, p);
}

bool ProgramPoset::is_finitely_lower_complemented(const Point& p) const {
  return order::finitely_lower_complemented(program_, p);
}

std::vector<Position> ProgramPoset::enumerate() const {
  return enumerate_positions(program_, max_iterations_);
}

void ProgramPoset::check(const Point& p) const {
  if (!is_valid_position(program_, p))
    throw InvalidPosition(to_string(p) + " is not a position of " + print_program(program_));
}

}  // namespace synreg
