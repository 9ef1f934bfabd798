#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "synreg/position.hpp"
#include "synreg/program.hpp"
#include "synreg/regions.hpp"
#include "synreg/resources.hpp"

namespace synreg {

using PositionRegion = Region<Position>;

// Positions of a program and the reductions between them, with the validity
// of every vertex and edge. An edge is valid when both of its endpoints are.
class StateGraph {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    bool valid;
  };

  StateGraph(Program program, std::vector<Position> vertices);

  const Program& program() const { return program_; }
  const std::vector<Position>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_valid(std::size_t vertex) const { return valid_[vertex] != 0; }
  std::optional<std::size_t> index_of(const Position& p) const;

  // Edges of the pruned state space.
  std::vector<Edge> pruned_edges() const;
  // Vertices that keep at least one valid incident edge.
  std::vector<std::size_t> pruned_vertices() const;

 private:
  Program program_;
  std::vector<Position> vertices_;
  std::vector<char> valid_;
  std::vector<Edge> edges_;
  std::unordered_map<Position, std::size_t> index_;
};

// Graph over enumerate_positions(prog, max_iterations); reductions leaving
// the enumerated set are dropped. Throws NonConservative or UnboundedLoop.
StateGraph build_state_graph(const Program& prog, std::optional<std::uint64_t> max_iterations = {});

// Replaces every loop by k nested optional copies of its body, guarded by a
// fresh opaque action: P* with k = 2 becomes skip + (P ; (skip + P)).
Program unroll_loops(const Program& prog, std::uint64_t k);

// The program the region analyses actually run on: prog itself when it is
// loop-free, unroll_loops(prog, *unroll) otherwise. Throws NonConservative,
// or UnboundedLoop when prog has loops and no unrolling depth is given.
Program analyzed_program(const Program& prog, std::optional<std::uint64_t> unroll = {});

// Normal-form region of the invalid positions of analyzed_program(prog, unroll).
PositionRegion forbidden_region(const Program& prog, std::optional<std::uint64_t> unroll = {});

// Normal-form region of the valid positions of analyzed_program(prog, unroll).
PositionRegion fundamental_region(const Program& prog, std::optional<std::uint64_t> unroll = {});

// Valid non-final positions reachable from bot through valid edges and
// without any valid successor.
std::vector<Position> find_deadlocks(const Program& prog, std::optional<std::uint64_t> unroll = {});

// Whether every prefix of a global execution keeps each mutex count in
// [0, 1]. Throws InvalidPath if the path does not start at bot or is not a
// sequence of reductions.
bool validate_execution(const Program& prog, const Path& path);

struct Analysis {
  Program analyzed;
  std::optional<std::uint64_t> unroll;
  ConsumptionMap delta;
  std::size_t position_count = 0;
  PositionRegion forbidden;
  PositionRegion fundamental;
  std::vector<Position> deadlocks;
};

// Everything above in one pass.
Analysis analyze(const Program& prog, std::optional<std::uint64_t> unroll = {});

}  // namespace synreg
