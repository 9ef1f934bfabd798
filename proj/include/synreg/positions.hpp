#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synreg/position.hpp"
#include "synreg/program.hpp"

namespace synreg {

bool is_valid_position(const Program& prog, const Position& p);

// One reduction step out of a position. `action` is the leaf executed by the
// step, or empty for purely structural steps such as bot -> seq(bot,bot).
struct Reduction {
  Position target;
  std::optional<Program> action;
};

// All one-step reductions from `p`. Throws InvalidPosition if p is not a
// position of prog.
std::vector<Reduction> reductions(const Program& prog, const Position& p);
std::vector<Position> successors(const Program& prog, const Position& p);

// The position order and its lattice operations. All throw InvalidPosition
// on arguments that are not positions of prog.
bool pos_leq(const Program& prog, const Position& p, const Position& q);
Position pos_join(const Program& prog, const Position& p, const Position& q);
Position pos_meet(const Program& prog, const Position& p, const Position& q);

// lower = maximal positions not above p, upper = minimal positions not below p.
struct ComplementGenerators {
  std::vector<Position> lower;
  std::vector<Position> upper;
};

ComplementGenerators complement_generators(const Program& prog, const Position& p);

// Whether the positions not above p are the downward closure of
// complement_generators(prog, p).lower. Fails only below the end of a loop.
bool is_finitely_lower_complemented(const Program& prog, const Position& p);

// Every position whose loop indices are all <= max_iterations, listed once
// each in an order compatible with the position order. Throws UnboundedLoop
// when prog contains a loop and no bound is given.
std::vector<Position> enumerate_positions(const Program& prog,
                                          std::optional<std::uint64_t> max_iterations = {});

namespace order {

// Unchecked variants: the caller guarantees that every argument is a
// position of prog.
bool leq(const Position& p, const Position& q);
Position join(const Position& p, const Position& q);
Position meet(const Position& p, const Position& q);
std::vector<Position> lower_generators(const Program& prog, const Position& p);
std::vector<Position> upper_generators(const Program& prog, const Position& p);
bool finitely_lower_complemented(const Program& prog, const Position& p);

}  // namespace order

}  // namespace synreg
