#include "synreg/resources.hpp"

#include "synreg/errors.hpp"
#include "synreg/positions.hpp"

namespace synreg {

using Kind = Program::Kind;

ConsumptionMap::ConsumptionMap(
    std::initializer_list<std::pair<const std::string, std::int64_t>> entries) {
  for (const auto& [name, amount] : entries) add(name, amount);
}

ConsumptionMap ConsumptionMap::unit(const std::string& mutex, std::int64_t amount) {
  ConsumptionMap m;
  m.add(mutex, amount);
  return m;
}

std::int64_t ConsumptionMap::operator[](const std::string& mutex) const {
  auto it = entries_.find(mutex);
  return it == entries_.end() ? 0 : it->second;
}

void ConsumptionMap::add(const std::string& mutex, std::int64_t amount) {
  if (amount == 0) return;
  auto [it, inserted] = entries_.emplace(mutex, amount);
  if (!inserted) {
    it->second += amount;
    if (it->second == 0) entries_.erase(it);
  }
}

ConsumptionMap& ConsumptionMap::operator+=(const ConsumptionMap& other) {
  for (const auto& [name, amount] : other.entries_) add(name, amount);
  return *this;
}

ConsumptionMap ConsumptionMap::operator-() const {
  ConsumptionMap m;
  for (const auto& [name, amount] : entries_) m.entries_.emplace(name, -amount);
  return m;
}

bool ConsumptionMap::within_mutex_bounds() const {
  for (const auto& [name, amount] : entries_)
    if (amount < 0 || amount > 1) return false;
  return true;
}

std::string to_string(const ConsumptionMap& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, amount] : m.entries()) {
    if (!first) out += ", ";
    first = false;
    out += name + ": " + std::to_string(amount);
  }
  return out + "}";
}

namespace {

ConsumptionMap leaf_consumption(const Program& leaf) {
  switch (leaf.kind()) {
    case Kind::Lock: return ConsumptionMap::unit(leaf.name(), 1);
    case Kind::Unlock: return ConsumptionMap::unit(leaf.name(), -1);
    default: return {};
  }
}

// Δ together with the innermost failing subterm.
std::optional<ConsumptionMap> delta(const Program& p, std::optional<Program>& culprit) {
  switch (p.kind()) {
    case Kind::Action:
    case Kind::Lock:
    case Kind::Unlock: return leaf_consumption(p);
    case Kind::Seq:
    case Kind::Par: {
      auto l = delta(p.left(), culprit);
      if (!l) return {};
      auto r = delta(p.right(), culprit);
      if (!r) return {};
      return *l + *r;
    }
    case Kind::Choice: {
      auto l = delta(p.left(), culprit);
      if (!l) return {};
      auto r = delta(p.right(), culprit);
      if (!r) return {};
      if (*l != *r) {
        culprit = p;
        return {};
      }
      return l;
    }
    case Kind::Loop: {
      auto b = delta(p.body(), culprit);
      if (!b) return {};
      if (!b->is_zero()) {
        culprit = p;
        return {};
      }
      return ConsumptionMap{};
    }
  }
  return {};
}

// Δ of a subterm already known to be conservative.
ConsumptionMap delta_of(const Program& p) {
  std::optional<Program> ignored;
  return *delta(p, ignored);
}

ConsumptionMap consumption_at(const Program& prog, const Position& p) {
  if (p.is_bot()) return {};
  if (p.is_top()) return delta_of(prog);
  switch (p.kind()) {
    case Position::Kind::Seq:
      if (p.right().is_bot()) return consumption_at(prog.left(), p.left());
      return delta_of(prog.left()) + consumption_at(prog.right(), p.right());
    case Position::Kind::Choice:
      if (!p.left().is_bot()) return consumption_at(prog.left(), p.left());
      return consumption_at(prog.right(), p.right());
    case Position::Kind::Par:
      return consumption_at(prog.left(), p.left()) + consumption_at(prog.right(), p.right());
    case Position::Kind::Loop:
      // completed iterations contribute nothing: the body has zero consumption
      return consumption_at(prog.body(), p.body());
    default: return {};
  }
}

}  // namespace

ConsumptionMap step_consumption(const Program& prog, const Step& step) {
  if (!is_valid_position(prog, step.from))
    throw InvalidPath(to_string(step.from) + " is not a position of " + print_program(prog));
  for (const auto& r : reductions(prog, step.from)) {
    if (r.target == step.to) return r.action ? leaf_consumption(*r.action) : ConsumptionMap{};
  }
  throw InvalidPath(to_string(step.from) + " -> " + to_string(step.to) + " is not a reduction");
}

ConsumptionMap path_consumption(const Program& prog, const Path& path) {
  ConsumptionMap total;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0 && !(path[i - 1].to == path[i].from))
      throw InvalidPath("steps " + std::to_string(i - 1) + " and " + std::to_string(i) +
                        " do not compose");
    total += step_consumption(prog, path[i]);
  }
  return total;
}

std::optional<ConsumptionMap> delta_program(const Program& prog) {
  std::optional<Program> culprit;
  return delta(prog, culprit);
}

bool is_conservative(const Program& prog) { return delta_program(prog).has_value(); }

std::optional<Program> non_conservative_subterm(const Program& prog) {
  std::optional<Program> culprit;
  delta(prog, culprit);
  return culprit;
}

void require_conservative(const Program& prog) {
  if (auto bad = non_conservative_subterm(prog)) throw NonConservative(print_program(*bad));
}

ConsumptionMap position_consumption(const Program& prog, const Position& p) {
  require_conservative(prog);
  if (!is_valid_position(prog, p))
    throw InvalidPosition(to_string(p) + " is not a position of " + print_program(prog));
  return consumption_at(prog, p);
}

bool is_valid_state(const Program& prog, const Position& p) {
  return position_consumption(prog, p).within_mutex_bounds();
}

}  // namespace synreg
