#include "synreg/position.hpp"

namespace synreg {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Position Position::make(Kind kind, LoopIndex index, const Position* left, const Position* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  if (kind == Kind::Loop) {
    LoopIndex low = index & LoopIndex(0xffffffffffffffffULL);
    h = mix(h, static_cast<std::size_t>(low.convert_to<std::uint64_t>()));
  }
  node->index = std::move(index);
  if (left != nullptr) {
    node->left = std::make_unique<const Position>(*left);
    h = mix(h, left->hash());
  }
  if (right != nullptr) {
    node->right = std::make_unique<const Position>(*right);
    h = mix(h, right->hash());
  }
  node->hash = h;
  return Position(std::move(node));
}

Position Position::bot() {
  static const Position p = make(Kind::Bot, 0, nullptr, nullptr);
  return p;
}
Position Position::top() {
  static const Position p = make(Kind::Top, 0, nullptr, nullptr);
  return p;
}
Position Position::seq(Position left, Position right) {
  return make(Kind::Seq, 0, &left, &right);
}
Position Position::choice(Position left, Position right) {
  return make(Kind::Choice, 0, &left, &right);
}
Position Position::loop(LoopIndex n, Position body) {
  return make(Kind::Loop, std::move(n), &body, nullptr);
}
Position Position::par(Position left, Position right) {
  return make(Kind::Par, 0, &left, &right);
}

bool operator==(const Position& a, const Position& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Position::Kind::Bot:
    case Position::Kind::Top: return true;
    case Position::Kind::Loop: return a.index() == b.index() && a.body() == b.body();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

std::strong_ordering operator<=>(const Position& a, const Position& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Position::Kind::Bot:
    case Position::Kind::Top: return std::strong_ordering::equal;
    case Position::Kind::Loop:
      if (a.index() != b.index())
        return a.index() < b.index() ? std::strong_ordering::less : std::strong_ordering::greater;
      return a.body() <=> b.body();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

std::string to_string(const Position& p) {
  switch (p.kind()) {
    case Position::Kind::Bot: return "bot";
    case Position::Kind::Top: return "top";
    case Position::Kind::Seq: return "seq(" + to_string(p.left()) + "," + to_string(p.right()) + ")";
    case Position::Kind::Choice:
      return "or(" + to_string(p.left()) + "," + to_string(p.right()) + ")";
    case Position::Kind::Par: return "par(" + to_string(p.left()) + "," + to_string(p.right()) + ")";
    case Position::Kind::Loop: return "loop[" + p.index().str() + "](" + to_string(p.body()) + ")";
  }
  return {};
}

}  // namespace synreg
