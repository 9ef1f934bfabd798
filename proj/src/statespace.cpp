#include "synreg/statespace.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "synreg/errors.hpp"
#include "synreg/positions.hpp"
#include "synreg/program_poset.hpp"

namespace synreg {

StateGraph::StateGraph(Program program, std::vector<Position> vertices)
    : program_(std::move(program)), vertices_(std::move(vertices)) {
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
  valid_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    valid_[i] = is_valid_state(program_, vertices_[i]);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (const auto& next : successors(program_, vertices_[i])) {
      auto j = index_of(next);
      if (!j) continue;
      edges_.push_back({i, *j, valid_[i] && valid_[*j]});
    }
  }
}

std::optional<std::size_t> StateGraph::index_of(const Position& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return {};
  return it->second;
}

std::vector<StateGraph::Edge> StateGraph::pruned_edges() const {
  std::vector<Edge> out;
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(out),
               [](const Edge& e) { return e.valid; });
  return out;
}

std::vector<std::size_t> StateGraph::pruned_vertices() const {
  std::vector<char> kept(vertices_.size(), 0);
  for (const auto& e : edges_) {
    if (!e.valid) continue;
    kept[e.from] = 1;
    kept[e.to] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (kept[i]) out.push_back(i);
  return out;
}

StateGraph build_state_graph(const Program& prog, std::optional<std::uint64_t> max_iterations) {
  require_conservative(prog);
  return StateGraph(prog, enumerate_positions(prog, max_iterations));
}

namespace {

void action_names(const Program& p, std::set<std::string>& out) {
  if (p.kind() == Program::Kind::Action) {
    out.insert(p.name());
  } else if (p.kind() == Program::Kind::Loop) {
    action_names(p.body(), out);
  } else if (p.is_binary()) {
    action_names(p.left(), out);
    action_names(p.right(), out);
  }
}

Program unroll(const Program& p, std::uint64_t k, const Program& skip) {
  switch (p.kind()) {
    case Program::Kind::Seq: return Program::seq(unroll(p.left(), k, skip), unroll(p.right(), k, skip));
    case Program::Kind::Choice:
      return Program::choice(unroll(p.left(), k, skip), unroll(p.right(), k, skip));
    case Program::Kind::Par: return Program::par(unroll(p.left(), k, skip), unroll(p.right(), k, skip));
    case Program::Kind::Loop: {
      if (k == 0) return skip;
      Program body = unroll(p.body(), k, skip);
      Program chain = body;
      for (std::uint64_t i = 1; i < k; ++i) chain = Program::seq(body, Program::choice(skip, chain));
      return Program::choice(skip, chain);
    }
    default: return p;
  }
}

std::vector<Position> invalid_positions(const Program& prog, const std::vector<Position>& all) {
  std::vector<Position> out;
  for (const auto& p : all)
    if (!is_valid_state(prog, p)) out.push_back(p);
  return out;
}

PositionRegion singletons(const std::vector<Position>& points) {
  std::vector<Interval<Position>> out;
  for (const auto& p : points) out.push_back({p, p});
  return PositionRegion(std::move(out));
}

PositionRegion forbidden_of(const Program& analyzed, const std::vector<Position>& all) {
  ProgramPoset poset(analyzed);
  return normalize(poset, singletons(invalid_positions(analyzed, all)));
}

PositionRegion fundamental_of(const Program& analyzed, const PositionRegion& forbidden) {
  ProgramPoset poset(analyzed);
  return normalize(poset, complement(poset, forbidden));
}

std::vector<Position> deadlocks_of(const StateGraph& graph) {
  const auto& vs = graph.vertices();
  std::vector<std::vector<std::size_t>> next(vs.size());
  for (const auto& e : graph.pruned_edges()) next[e.from].push_back(e.to);
  auto start = graph.index_of(Position::bot());
  std::vector<char> seen(vs.size(), 0);
  std::deque<std::size_t> queue;
  if (start && graph.is_valid(*start)) {
    seen[*start] = 1;
    queue.push_back(*start);
  }
  std::vector<Position> out;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    if (next[i].empty() && !vs[i].is_top()) out.push_back(vs[i]);
    for (std::size_t j : next[i]) {
      if (!seen[j]) {
        seen[j] = 1;
        queue.push_back(j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Program unroll_loops(const Program& prog, std::uint64_t k) {
  if (!prog.has_loop()) return prog;
  std::set<std::string> used;
  action_names(prog, used);
  std::string name = "skip";
  for (int i = 1; used.count(name) != 0; ++i) name = "skip" + std::to_string(i);
  return unroll(prog, k, Program::action(name));
}

Program analyzed_program(const Program& prog, std::optional<std::uint64_t> unroll) {
  require_conservative(prog);
  if (!prog.has_loop()) return prog;
  if (!unroll)
    throw UnboundedLoop("program has loops; give an unrolling depth to analyze " +
                        print_program(prog));
  return unroll_loops(prog, *unroll);
}

PositionRegion forbidden_region(const Program& prog, std::optional<std::uint64_t> unroll) {
  Program analyzed = analyzed_program(prog, unroll);
  return forbidden_of(analyzed, enumerate_positions(analyzed));
}

PositionRegion fundamental_region(const Program& prog, std::optional<std::uint64_t> unroll) {
  Program analyzed = analyzed_program(prog, unroll);
  return fundamental_of(analyzed, forbidden_of(analyzed, enumerate_positions(analyzed)));
}

std::vector<Position> find_deadlocks(const Program& prog, std::optional<std::uint64_t> unroll) {
  Program analyzed = analyzed_program(prog, unroll);
  return deadlocks_of(StateGraph(analyzed, enumerate_positions(analyzed)));
}

bool validate_execution(const Program& prog, const Path& path) {
  if (!path.empty() && !path.front().from.is_bot())
    throw InvalidPath("a global execution starts at bot, not " + to_string(path.front().from));
  path_consumption(prog, path);  // rejects malformed paths up front
  ConsumptionMap acc;
  for (const auto& step : path) {
    acc += step_consumption(prog, step);
    if (!acc.within_mutex_bounds()) return false;
  }
  return true;
}

Analysis analyze(const Program& prog, std::optional<std::uint64_t> unroll) {
  Program analyzed = analyzed_program(prog, unroll);
  auto all = enumerate_positions(analyzed);
  Analysis out{analyzed, prog.has_loop() ? unroll : std::nullopt, *delta_program(prog),
               all.size(), {}, {}, {}};
  out.forbidden = forbidden_of(analyzed, all);
  out.fundamental = fundamental_of(analyzed, out.forbidden);
  out.deadlocks = deadlocks_of(StateGraph(analyzed, std::move(all)));
  return out;
}

}  // namespace synreg
