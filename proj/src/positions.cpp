#include "synreg/positions.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "synreg/errors.hpp"

namespace synreg {

using Kind = Program::Kind;
using PKind = Position::Kind;

namespace {

bool shape_ok(const Program& prog, const Position& p) {
  if (p.is_bot() || p.is_top()) return true;
  switch (p.kind()) {
    case PKind::Seq:
      if (prog.kind() != Kind::Seq) return false;
      if (p.right().is_bot()) return shape_ok(prog.left(), p.left());
      return p.left().is_top() && shape_ok(prog.right(), p.right());
    case PKind::Choice:
      if (prog.kind() != Kind::Choice) return false;
      if (p.right().is_bot()) return shape_ok(prog.left(), p.left());
      if (p.left().is_bot()) return shape_ok(prog.right(), p.right());
      return false;
    case PKind::Loop:
      return prog.kind() == Kind::Loop && shape_ok(prog.body(), p.body());
    case PKind::Par:
      return prog.kind() == Kind::Par && shape_ok(prog.left(), p.left()) &&
             shape_ok(prog.right(), p.right());
    default: return false;
  }
}

void require_valid(const Program& prog, const Position& p) {
  if (!shape_ok(prog, p))
    throw InvalidPosition(to_string(p) + " is not a position of " + print_program(prog));
}

void reduce(const Program& prog, const Position& p, std::vector<Reduction>& out) {
  if (p.is_top()) return;
  if (prog.is_leaf()) {
    if (p.is_bot()) out.push_back({Position::top(), prog});
    return;
  }
  const Position bot = Position::bot();
  const Position top = Position::top();
  std::vector<Reduction> inner;
  switch (prog.kind()) {
    case Kind::Seq:
      if (p.is_bot()) {
        out.push_back({Position::seq(bot, bot), {}});
        return;
      }
      if (p.right().is_bot()) {
        reduce(prog.left(), p.left(), inner);
        for (auto& r : inner) out.push_back({Position::seq(r.target, bot), std::move(r.action)});
        inner.clear();
      }
      if (p.left().is_top()) {
        reduce(prog.right(), p.right(), inner);
        for (auto& r : inner) out.push_back({Position::seq(top, r.target), std::move(r.action)});
        if (p.right().is_top()) out.push_back({top, {}});
      }
      return;
    case Kind::Choice:
      if (p.is_bot()) {
        out.push_back({Position::choice(bot, bot), {}});
        return;
      }
      if (p.right().is_bot()) {
        reduce(prog.left(), p.left(), inner);
        for (auto& r : inner) out.push_back({Position::choice(r.target, bot), std::move(r.action)});
        inner.clear();
        if (p.left().is_top()) out.push_back({top, {}});
      }
      if (p.left().is_bot()) {
        reduce(prog.right(), p.right(), inner);
        for (auto& r : inner) out.push_back({Position::choice(bot, r.target), std::move(r.action)});
        if (p.right().is_top()) out.push_back({top, {}});
      }
      return;
    case Kind::Loop:
      if (p.is_bot()) {
        out.push_back({Position::loop(0, bot), {}});
        out.push_back({top, {}});
        return;
      }
      reduce(prog.body(), p.body(), inner);
      for (auto& r : inner) out.push_back({Position::loop(p.index(), r.target), std::move(r.action)});
      if (p.body().is_top()) {
        out.push_back({Position::loop(p.index() + 1, bot), {}});
        out.push_back({top, {}});
      }
      return;
    case Kind::Par:
      if (p.is_bot()) {
        out.push_back({Position::par(bot, bot), {}});
        return;
      }
      reduce(prog.left(), p.left(), inner);
      for (auto& r : inner) out.push_back({Position::par(r.target, p.right()), std::move(r.action)});
      inner.clear();
      reduce(prog.right(), p.right(), inner);
      for (auto& r : inner) out.push_back({Position::par(p.left(), r.target), std::move(r.action)});
      if (p.left().is_top() && p.right().is_top()) out.push_back({top, {}});
      return;
    default: return;
  }
}

template <class F>
std::vector<Position> map(const std::vector<Position>& xs, F f) {
  std::vector<Position> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

void append(std::vector<Position>& out, std::vector<Position> more) {
  for (auto& x : more) out.push_back(std::move(x));
}

std::vector<Position> sorted(std::vector<Position> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Position> lower(const Program& prog, const Position& p) {
  const Position bot = Position::bot();
  const Position top = Position::top();
  if (p.is_bot()) return {};
  if (p.is_top()) {
    switch (prog.kind()) {
      case Kind::Seq: return {Position::seq(top, top)};
      case Kind::Choice: return {Position::choice(top, bot), Position::choice(bot, top)};
      case Kind::Par: return {Position::par(top, top)};
      case Kind::Loop: return {};
      default: return {bot};
    }
  }
  const Position& l = p.kind() == PKind::Loop ? p.body() : p.left();
  switch (prog.kind()) {
    case Kind::Seq: {
      const Position& r = p.right();
      if (l.is_bot() && r.is_bot()) return {bot};
      if (r.is_bot())
        return map(lower(prog.left(), l), [&](const Position& x) { return Position::seq(x, bot); });
      return map(lower(prog.right(), r), [&](const Position& x) { return Position::seq(top, x); });
    }
    case Kind::Choice: {
      const Position& r = p.right();
      if (l.is_bot() && r.is_bot()) return {bot};
      // The fully executed other branch, plus everything below p on its own
      // branch. choice(bot,bot) is dominated by that other branch.
      std::vector<Position> out;
      if (r.is_bot()) {
        for (const auto& x : lower(prog.left(), l))
          if (!x.is_bot()) out.push_back(Position::choice(x, bot));
        out.push_back(Position::choice(bot, top));
      } else {
        for (const auto& x : lower(prog.right(), r))
          if (!x.is_bot()) out.push_back(Position::choice(bot, x));
        out.push_back(Position::choice(top, bot));
      }
      return out;
    }
    case Kind::Par: {
      const Position& r = p.right();
      if (l.is_bot() && r.is_bot()) return {bot};
      auto out = map(lower(prog.left(), l), [&](const Position& x) { return Position::par(x, top); });
      append(out,
             map(lower(prog.right(), r), [&](const Position& x) { return Position::par(top, x); }));
      return out;
    }
    case Kind::Loop:
      if (l.is_bot()) {
        if (p.index() == 0) return {bot};
        return {Position::loop(p.index() - 1, top)};
      }
      return map(lower(prog.body(), l), [&](const Position& x) { return Position::loop(p.index(), x); });
    default: return {};
  }
}

std::vector<Position> upper(const Program& prog, const Position& p) {
  const Position bot = Position::bot();
  const Position top = Position::top();
  if (p.is_top()) return {};
  if (p.is_bot()) {
    switch (prog.kind()) {
      case Kind::Seq: return {Position::seq(bot, bot)};
      case Kind::Choice: return {Position::choice(bot, bot)};
      case Kind::Par: return {Position::par(bot, bot)};
      case Kind::Loop: return {Position::loop(0, bot)};
      default: return {top};
    }
  }
  const Position& l = p.kind() == PKind::Loop ? p.body() : p.left();
  std::vector<Position> out;
  switch (prog.kind()) {
    case Kind::Seq: {
      const Position& r = p.right();
      if (r.is_bot() && !l.is_top())
        return map(upper(prog.left(), l), [&](const Position& x) { return Position::seq(x, bot); });
      out = map(upper(prog.right(), r), [&](const Position& x) { return Position::seq(top, x); });
      break;
    }
    case Kind::Choice: {
      const Position& r = p.right();
      if (r.is_bot()) {
        out = map(upper(prog.left(), l), [&](const Position& x) { return Position::choice(x, bot); });
        append(out, map(upper(prog.right(), bot),
                        [&](const Position& x) { return Position::choice(bot, x); }));
      } else {
        out = map(upper(prog.right(), r), [&](const Position& x) { return Position::choice(bot, x); });
        append(out, map(upper(prog.left(), bot),
                        [&](const Position& x) { return Position::choice(x, bot); }));
      }
      break;
    }
    case Kind::Par:
      out = map(upper(prog.left(), l), [&](const Position& x) { return Position::par(x, bot); });
      append(out, map(upper(prog.right(), p.right()),
                      [&](const Position& x) { return Position::par(bot, x); }));
      break;
    case Kind::Loop:
      if (l.is_top()) return {Position::loop(p.index() + 1, bot)};
      return map(upper(prog.body(), l), [&](const Position& x) { return Position::loop(p.index(), x); });
    default: break;
  }
  if (out.empty()) out.push_back(top);
  return out;
}

bool flc(const Program& prog, const Position& p) {
  if (p.is_bot()) return true;
  if (p.is_top()) return prog.kind() != Kind::Loop;
  switch (p.kind()) {
    case PKind::Seq:
      if (p.right().is_bot()) return flc(prog.left(), p.left());
      return flc(prog.right(), p.right());
    case PKind::Choice:
      if (!p.left().is_bot()) return flc(prog.left(), p.left());
      return flc(prog.right(), p.right());
    case PKind::Par: return flc(prog.left(), p.left()) && flc(prog.right(), p.right());
    case PKind::Loop: return flc(prog.body(), p.body());
    default: return true;
  }
}

void all_positions(const Program& prog, std::uint64_t bound, std::vector<Position>& out) {
  const Position bot = Position::bot();
  const Position top = Position::top();
  out.push_back(bot);
  std::vector<Position> a, b;
  switch (prog.kind()) {
    case Kind::Seq:
      all_positions(prog.left(), bound, a);
      all_positions(prog.right(), bound, b);
      for (const auto& x : a) out.push_back(Position::seq(x, bot));
      for (const auto& y : b)
        if (!y.is_bot()) out.push_back(Position::seq(top, y));
      break;
    case Kind::Choice:
      all_positions(prog.left(), bound, a);
      all_positions(prog.right(), bound, b);
      for (const auto& x : a) out.push_back(Position::choice(x, bot));
      for (const auto& y : b)
        if (!y.is_bot()) out.push_back(Position::choice(bot, y));
      break;
    case Kind::Par:
      all_positions(prog.left(), bound, a);
      all_positions(prog.right(), bound, b);
      for (const auto& x : a)
        for (const auto& y : b) out.push_back(Position::par(x, y));
      break;
    case Kind::Loop:
      all_positions(prog.body(), bound, a);
      for (std::uint64_t n = 0; n <= bound; ++n)
        for (const auto& x : a) out.push_back(Position::loop(n, x));
      break;
    default: break;
  }
  out.push_back(top);
}

}  // namespace

namespace order {

bool leq(const Position& p, const Position& q) {
  if (p.is_bot() || q.is_top()) return true;
  if (p.is_top() || q.is_bot()) return false;
  if (p.kind() != q.kind()) return false;
  if (p.kind() == PKind::Loop) {
    if (p.index() != q.index()) return p.index() < q.index();
    return leq(p.body(), q.body());
  }
  return leq(p.left(), q.left()) && leq(p.right(), q.right());
}

Position join(const Position& p, const Position& q) {
  if (p.is_bot() || q.is_top()) return q;
  if (q.is_bot() || p.is_top()) return p;
  switch (p.kind()) {
    case PKind::Seq: return Position::seq(join(p.left(), q.left()), join(p.right(), q.right()));
    case PKind::Par: return Position::par(join(p.left(), q.left()), join(p.right(), q.right()));
    case PKind::Choice: {
      Position l = join(p.left(), q.left());
      Position r = join(p.right(), q.right());
      // committed to different branches
      if (!l.is_bot() && !r.is_bot()) return Position::top();
      return Position::choice(std::move(l), std::move(r));
    }
    case PKind::Loop:
      if (p.index() < q.index()) return q;
      if (q.index() < p.index()) return p;
      return Position::loop(p.index(), join(p.body(), q.body()));
    default: return Position::top();
  }
}

Position meet(const Position& p, const Position& q) {
  if (p.is_top() || q.is_bot()) return q;
  if (q.is_top() || p.is_bot()) return p;
  switch (p.kind()) {
    case PKind::Seq: return Position::seq(meet(p.left(), q.left()), meet(p.right(), q.right()));
    case PKind::Par: return Position::par(meet(p.left(), q.left()), meet(p.right(), q.right()));
    case PKind::Choice:
      return Position::choice(meet(p.left(), q.left()), meet(p.right(), q.right()));
    case PKind::Loop:
      if (p.index() < q.index()) return p;
      if (q.index() < p.index()) return q;
      return Position::loop(p.index(), meet(p.body(), q.body()));
    default: return Position::bot();
  }
}

std::vector<Position> lower_generators(const Program& prog, const Position& p) {
  return sorted(lower(prog, p));
}

std::vector<Position> upper_generators(const Program& prog, const Position& p) {
  return sorted(upper(prog, p));
}

bool finitely_lower_complemented(const Program& prog, const Position& p) { return flc(prog, p); }

}  // namespace order

bool is_valid_position(const Program& prog, const Position& p) { return shape_ok(prog, p); }

std::vector<Reduction> reductions(const Program& prog, const Position& p) {
  require_valid(prog, p);
  std::vector<Reduction> out;
  reduce(prog, p, out);
  return out;
}

std::vector<Position> successors(const Program& prog, const Position& p) {
  std::vector<Position> out;
  for (auto& r : reductions(prog, p)) out.push_back(std::move(r.target));
  return out;
}

bool pos_leq(const Program& prog, const Position& p, const Position& q) {
  require_valid(prog, p);
  require_valid(prog, q);
  return order::leq(p, q);
}

Position pos_join(const Program& prog, const Position& p, const Position& q) {
  require_valid(prog, p);
  require_valid(prog, q);
  return order::join(p, q);
}

Position pos_meet(const Program& prog, const Position& p, const Position& q) {
  require_valid(prog, p);
  require_valid(prog, q);
  return order::meet(p, q);
}

ComplementGenerators complement_generators(const Program& prog, const Position& p) {
  require_valid(prog, p);
  return {order::lower_generators(prog, p), order::upper_generators(prog, p)};
}

bool is_finitely_lower_complemented(const Program& prog, const Position& p) {
  require_valid(prog, p);
  return flc(prog, p);
}

std::vector<Position> enumerate_positions(const Program& prog,
                                          std::optional<std::uint64_t> max_iterations) {
  if (prog.has_loop() && !max_iterations)
    throw UnboundedLoop("cannot enumerate the positions of a program with loops without a bound: " +
                        print_program(prog));
  std::vector<Position> all;
  all_positions(prog, max_iterations.value_or(0), all);

  // Kahn's algorithm on the reduction graph restricted to the enumerated
  // set; its reflexive-transitive closure is the position order.
  std::unordered_map<Position, std::size_t> index;
  index.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  std::vector<std::vector<std::size_t>> next(all.size());
  std::vector<std::size_t> indegree(all.size(), 0);
  std::vector<Reduction> reds;
  for (std::size_t i = 0; i < all.size(); ++i) {
    reds.clear();
    reduce(prog, all[i], reds);
    for (const auto& r : reds) {
      auto it = index.find(r.target);
      if (it == index.end()) continue;
      next[i].push_back(it->second);
      ++indegree[it->second];
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::vector<Position> out;
  out.reserve(all.size());
  while (!ready.empty()) {
    std::size_t i = ready.front();
    ready.pop_front();
    out.push_back(all[i]);
    for (std::size_t j : next[i])
      if (--indegree[j] == 0) ready.push_back(j);
  }
  return out;
}

}  // namespace synreg
