#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "synreg/position.hpp"
#include "synreg/program.hpp"

namespace synreg {

// Net number of takes minus releases per mutex. Finite support: absent
// mutexes count as zero and zero entries are never stored.
class ConsumptionMap {
 public:
  ConsumptionMap() = default;
  ConsumptionMap(std::initializer_list<std::pair<const std::string, std::int64_t>> entries);

  static ConsumptionMap unit(const std::string& mutex, std::int64_t amount = 1);

  std::int64_t operator[](const std::string& mutex) const;
  const std::map<std::string, std::int64_t>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  ConsumptionMap& operator+=(const ConsumptionMap& other);
  friend ConsumptionMap operator+(ConsumptionMap a, const ConsumptionMap& b) { return a += b; }
  ConsumptionMap operator-() const;
  friend bool operator==(const ConsumptionMap&, const ConsumptionMap&) = default;

  // Every count lies in [0, 1].
  bool within_mutex_bounds() const;

 private:
  void add(const std::string& mutex, std::int64_t amount);
  std::map<std::string, std::int64_t> entries_;
};

std::string to_string(const ConsumptionMap& m);

struct Step {
  Position from;
  Position to;
};

using Path = std::vector<Step>;

// Consumption of the leaf executed by one reduction step. Throws InvalidPath
// when `step` is not a reduction of prog.
ConsumptionMap step_consumption(const Program& prog, const Step& step);

// Sum of the step consumptions. Throws InvalidPath on a non-reduction step or
// when consecutive steps do not compose.
ConsumptionMap path_consumption(const Program& prog, const Path& path);

// The consumption of a whole program, or nothing when a choice has branches
// with different consumptions or a loop body has nonzero consumption.
std::optional<ConsumptionMap> delta_program(const Program& prog);

bool is_conservative(const Program& prog);

// The innermost subterm whose consumption is undefined, if any.
std::optional<Program> non_conservative_subterm(const Program& prog);

// Throws NonConservative naming the offending subterm.
void require_conservative(const Program& prog);

// Consumption of every execution from bot to p. Requires a conservative
// program; throws NonConservative or InvalidPosition otherwise.
ConsumptionMap position_consumption(const Program& prog, const Position& p);

// No mutex is held twice or released before being taken at p.
bool is_valid_state(const Program& prog, const Position& p);

}  // namespace synreg
