#include "synreg/render.hpp"

#include <algorithm>
#include <sstream>

#include "synreg/errors.hpp"
#include "synreg/positions.hpp"
#include "synreg/program_poset.hpp"

namespace synreg {

namespace {

bool flatten(const Program& p, std::vector<std::string>& out) {
  if (p.is_leaf()) {
    out.push_back(print_program(p));
    return true;
  }
  if (p.kind() != Program::Kind::Seq) return false;
  return flatten(p.left(), out) && flatten(p.right(), out);
}

// Number of actions of `prog` already executed at p.
std::size_t done(const Program& prog, const Position& p) {
  if (p.is_bot()) return 0;
  if (p.is_top()) return prog.leaf_count();
  return done(prog.left(), p.left()) + done(prog.right(), p.right());
}

}  // namespace

RenderGrid render_grid(const Program& prog, const std::vector<RenderLayer>& layers,
                       const std::vector<Position>& deadlocks) {
  RenderGrid g;
  if (prog.kind() != Program::Kind::Par || !flatten(prog.left(), g.x_actions) ||
      !flatten(prog.right(), g.y_actions))
    throw UnsupportedShape("render needs two threads of plain action sequences, T1 || T2; got " +
                           print_program(prog));
  g.layers = layers;
  const std::size_t w = g.x_actions.size() + 1;
  const std::size_t h = g.y_actions.size() + 1;
  g.cells.assign(h, std::string(w, '.'));

  ProgramPoset poset(prog);
  for (const auto& p : enumerate_positions(prog)) {
    if (p.kind() != Position::Kind::Par) continue;
    std::size_t i = done(prog.left(), p.left());
    std::size_t j = done(prog.right(), p.right());
    char& cell = g.cells[j][i];
    if (cell != '.') continue;
    for (const auto& layer : layers) {
      if (member(poset, layer.region, p)) {
        cell = layer.mark;
        break;
      }
    }
  }
  for (const auto& d : deadlocks) {
    if (d.kind() != Position::Kind::Par) continue;
    std::pair<std::size_t, std::size_t> c{done(prog.left(), d.left()), done(prog.right(), d.right())};
    g.cells[c.second][c.first] = 'X';
    g.deadlock_cells.push_back(c);
  }
  std::sort(g.deadlock_cells.begin(), g.deadlock_cells.end());
  g.deadlock_cells.erase(std::unique(g.deadlock_cells.begin(), g.deadlock_cells.end()),
                         g.deadlock_cells.end());
  return g;
}

std::string render_text(const RenderGrid& g) {
  std::size_t label_width = 0;
  for (const auto& a : g.y_actions) label_width = std::max(label_width, a.size());
  std::ostringstream out;
  for (std::size_t row = g.cells.size(); row-- > 0;) {
    std::string label = row == 0 ? "" : g.y_actions[row - 1];
    out << std::string(label_width - label.size(), ' ') << label << ' ' << row % 10 << " |";
    for (char c : g.cells[row]) out << ' ' << c;
    out << '\n';
  }
  out << std::string(label_width + 3, ' ') << '+' << std::string(2 * g.cells.front().size(), '-')
      << '\n';
  out << std::string(label_width + 4, ' ');
  for (std::size_t i = 0; i < g.cells.front().size(); ++i) out << ' ' << i % 10;
  out << '\n';
  out << "thread 1:";
  for (std::size_t i = 0; i < g.x_actions.size(); ++i) out << ' ' << i + 1 << '=' << g.x_actions[i];
  out << '\n';
  out << "legend: . free";
  for (const auto& layer : g.layers) out << "  " << layer.mark << ' ' << layer.label;
  out << "  X deadlock\n";
  return out.str();
}

}  // namespace synreg
