#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace synreg {

// Abstract syntax of a concurrent program with mutexes.
//
// Programs are immutable trees with shared subterms; copying a Program is
// cheap. Lock/Unlock are the P(a)/V(a) primitives, every other leaf is an
// opaque action.
class Program {
 public:
  enum class Kind { Action, Lock, Unlock, Seq, Choice, Loop, Par };

  static Program action(std::string name);
  static Program lock(std::string mutex);
  static Program unlock(std::string mutex);
  static Program seq(Program left, Program right);
  static Program choice(Program left, Program right);
  static Program loop(Program body);
  static Program par(Program left, Program right);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind <= Kind::Unlock; }
  bool is_binary() const {
    return node_->kind == Kind::Seq || node_->kind == Kind::Choice || node_->kind == Kind::Par;
  }

  // Action name or mutex name; empty for composite nodes.
  const std::string& name() const { return node_->name; }

  // Children. left()/right() for binary nodes, body() for loops.
  const Program& left() const { return *node_->left; }
  const Program& right() const { return *node_->right; }
  const Program& body() const { return *node_->left; }

  bool has_loop() const { return node_->has_loop; }
  // Number of leaves (actions and mutex primitives).
  std::size_t leaf_count() const { return node_->leaves; }

  friend bool operator==(const Program& a, const Program& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<const Program> left;
    std::unique_ptr<const Program> right;
    bool has_loop = false;
    std::size_t leaves = 0;
  };

  explicit Program(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Program make(Kind kind, std::string name, const Program* left, const Program* right);

  std::shared_ptr<const Node> node_;
};

Program parse_program(std::string_view text);

// Concrete syntax, parenthesized only where precedence requires it.
std::string print_program(const Program& program);

std::set<std::string> mutexes_of(const Program& program);

// True when `name` can be printed bare (otherwise it is quoted).
bool is_identifier(std::string_view name);

}  // namespace synreg
