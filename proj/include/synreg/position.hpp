#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace synreg {

// Loop iteration counters are unbounded naturals.
using LoopIndex = boost::multiprecision::cpp_int;

// A pre-position: a term describing how much of a program has been explored.
//
// Whether a pre-position is a (valid) position depends on the program it is
// read against; see positions.hpp. Like Program, a Position is an immutable
// tree with shared subterms and structural equality.
class Position {
 public:
  enum class Kind { Bot, Top, Seq, Choice, Loop, Par };

  static Position bot();
  static Position top();
  static Position seq(Position left, Position right);
  static Position choice(Position left, Position right);
  static Position loop(LoopIndex n, Position body);
  static Position par(Position left, Position right);

  Kind kind() const { return node_->kind; }
  bool is_bot() const { return node_->kind == Kind::Bot; }
  bool is_top() const { return node_->kind == Kind::Top; }

  const Position& left() const { return *node_->left; }
  const Position& right() const { return *node_->right; }
  const Position& body() const { return *node_->left; }
  const LoopIndex& index() const { return node_->index; }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Position& a, const Position& b);
  // Structural total order (not the position order of a program).
  friend std::strong_ordering operator<=>(const Position& a, const Position& b);

 private:
  struct Node {
    Kind kind;
    LoopIndex index;
    std::unique_ptr<const Position> left;
    std::unique_ptr<const Position> right;
    std::size_t hash = 0;
  };

  explicit Position(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Position make(Kind kind, LoopIndex index, const Position* left, const Position* right);

  std::shared_ptr<const Node> node_;
};

// Compact human-readable form: bot, top, seq(p,q), or(p,q), loop[n](p), par(p,q).
std::string to_string(const Position& p);

}  // namespace synreg

template <>
struct std::hash<synreg::Position> {
  std::size_t operator()(const synreg::Position& p) const noexcept { return p.hash(); }
};
