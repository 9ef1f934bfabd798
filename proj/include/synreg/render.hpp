#pragma once

#include <string>
#include <vector>

#include "synreg/position.hpp"
#include "synreg/program.hpp"
#include "synreg/statespace.hpp"

namespace synreg {

struct RenderLayer {
  std::string label;
  char mark;
  PositionRegion region;
};

// Two-thread picture of a program T1 || T2 where both threads are sequences
// of actions. Cell (i, j) stands for the positions where thread 1 has run i
// actions and thread 2 has run j; intermediate structural positions collapse
// onto the same cell.
struct RenderGrid {
  std::vector<std::string> x_actions;  // thread 1
  std::vector<std::string> y_actions;  // thread 2
  // cells[j][i], '.' when no layer covers the cell, 'X' on a deadlock
  std::vector<std::string> cells;
  std::vector<std::pair<std::size_t, std::size_t>> deadlock_cells;
  std::vector<RenderLayer> layers;
};

// Throws UnsupportedShape for any other program shape.
RenderGrid render_grid(const Program& prog, const std::vector<RenderLayer>& layers,
                       const std::vector<Position>& deadlocks);

std::string render_text(const RenderGrid& grid);

}  // namespace synreg
