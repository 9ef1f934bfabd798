#include "synreg/program.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <vector>

#include "synreg/errors.hpp"

namespace synreg {

Program Program::make(Kind kind, std::string name, const Program* left, const Program* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  if (left != nullptr) {
    node->left = std::make_unique<const Program>(*left);
    node->has_loop = left->has_loop();
    node->leaves += left->leaf_count();
  }
  if (right != nullptr) {
    node->right = std::make_unique<const Program>(*right);
    node->has_loop = node->has_loop || right->has_loop();
    node->leaves += right->leaf_count();
  }
  if (kind == Kind::Loop) node->has_loop = true;
  if (left == nullptr) node->leaves = 1;
  return Program(std::move(node));
}

Program Program::action(std::string name) {
  return make(Kind::Action, std::move(name), nullptr, nullptr);
}
Program Program::lock(std::string mutex) {
  return make(Kind::Lock, std::move(mutex), nullptr, nullptr);
}
Program Program::unlock(std::string mutex) {
  return make(Kind::Unlock, std::move(mutex), nullptr, nullptr);
}
Program Program::seq(Program left, Program right) { return make(Kind::Seq, {}, &left, &right); }
Program Program::choice(Program left, Program right) {
  return make(Kind::Choice, {}, &left, &right);
}
Program Program::loop(Program body) { return make(Kind::Loop, {}, &body, nullptr); }
Program Program::par(Program left, Program right) { return make(Kind::Par, {}, &left, &right); }

bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_leaf()) return a.name() == b.name();
  if (a.kind() == Program::Kind::Loop) return a.body() == b.body();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '=';
}

enum class Tok { Ident, String, Lock, Unlock, LParen, RParen, Semi, Plus, Bar, Star, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      std::size_t line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, {}, line, col});
        return out;
      }
      char c = text_[pos_];
      if (ident_start(c)) {
        std::string word;
        while (pos_ < text_.size() && ident_char(text_[pos_])) word += advance();
        if (word == "P" || word == "V") {
          // P(a) / V(a): the parenthesis may follow after blanks.
          std::size_t save_pos = pos_, save_line = line_, save_col = col_;
          skip_blank();
          if (pos_ < text_.size() && text_[pos_] == '(') {
            out.push_back({word == "P" ? Tok::Lock : Tok::Unlock, word, line, col});
            continue;
          }
          pos_ = save_pos;
          line_ = save_line;
          col_ = save_col;
        }
        out.push_back({Tok::Ident, std::move(word), line, col});
      } else if (c == '"') {
        advance();
        std::string s;
        for (;;) {
          if (pos_ >= text_.size()) throw SyntaxError("unterminated string", line, col);
          char d = advance();
          if (d == '"') break;
          if (d == '\\') {
            if (pos_ >= text_.size()) throw SyntaxError("unterminated string", line, col);
            d = advance();
          }
          s += d;
        }
        if (s.empty()) throw SyntaxError("empty action name", line, col);
        out.push_back({Tok::String, std::move(s), line, col});
      } else if (c == '|') {
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '|')
          throw SyntaxError("expected '||'", line, col);
        advance();
        out.push_back({Tok::Bar, "||", line, col});
      } else {
        Tok kind;
        switch (c) {
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case ';': kind = Tok::Semi; break;
          case '+': kind = Tok::Plus; break;
          case '*': kind = Tok::Star; break;
          default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance();
        out.push_back({kind, std::string(1, c), line, col});
      }
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident:
    case Tok::String: return "action '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    if (peek().kind == Tok::End) throw SyntaxError("empty program", peek().line, peek().column);
    Program p = par();
    if (peek().kind != Tok::End) fail("expected end of input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + ", found " + describe(peek()), peek().line, peek().column);
  }

  Program par() {
    Program l = choice();
    if (peek().kind == Tok::Bar) {
      next();
      return Program::par(std::move(l), par());
    }
    return l;
  }

  Program choice() {
    Program l = seq();
    if (peek().kind == Tok::Plus) {
      next();
      return Program::choice(std::move(l), choice());
    }
    return l;
  }

  Program seq() {
    Program l = atom();
    if (peek().kind == Tok::Semi) {
      next();
      return Program::seq(std::move(l), seq());
    }
    return l;
  }

  Program atom() {
    Program p = base();
    while (peek().kind == Tok::Star) {
      next();
      p = Program::loop(std::move(p));
    }
    return p;
  }

  Program base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
      case Tok::String: return Program::action(next().text);
      case Tok::Lock:
      case Tok::Unlock: {
        bool is_lock = next().kind == Tok::Lock;
        expect(Tok::LParen, "expected '('");
        std::string name;
        if (peek().kind == Tok::Ident || peek().kind == Tok::String) {
          name = next().text;
        } else {
          fail("expected mutex name");
        }
        expect(Tok::RParen, "expected ')' after mutex name");
        return is_lock ? Program::lock(std::move(name)) : Program::unlock(std::move(name));
      }
      case Tok::LParen: {
        const Token& open = next();
        if (peek().kind == Tok::End)
          throw SyntaxError("unclosed parenthesis", open.line, open.column);
        Program p = par();
        if (peek().kind == Tok::End)
          throw SyntaxError("unclosed parenthesis", open.line, open.column);
        expect(Tok::RParen, "expected ')'");
        return p;
      }
      default: fail("expected a program");
    }
  }

  void expect(Tok kind, const char* msg) {
    if (peek().kind != kind) fail(msg);
    next();
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// Binding strength, loosest first.
int level(const Program& p) {
  switch (p.kind()) {
    case Program::Kind::Par: return 0;
    case Program::Kind::Choice: return 1;
    case Program::Kind::Seq: return 2;
    default: return 3;
  }
}

std::string quote(const std::string& name) {
  if (is_identifier(name)) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void print(const Program& p, std::string& out) {
  auto sub = [&out](const Program& child, int min_level) {
    if (level(child) < min_level) {
      out += '(';
      print(child, out);
      out += ')';
    } else {
      print(child, out);
    }
  };
  switch (p.kind()) {
    case Program::Kind::Action: out += quote(p.name()); break;
    case Program::Kind::Lock: out += "P(" + quote(p.name()) + ")"; break;
    case Program::Kind::Unlock: out += "V(" + quote(p.name()) + ")"; break;
    case Program::Kind::Loop:
      sub(p.body(), 3);
      out += '*';
      break;
    default: {
      static const char* ops[] = {" || ", " + ", " ; "};
      int lv = level(p);
      // right-associative: the left operand must bind strictly tighter
      sub(p.left(), lv + 1);
      out += ops[lv];
      sub(p.right(), lv);
    }
  }
}

void collect_mutexes(const Program& p, std::set<std::string>& out) {
  switch (p.kind()) {
    case Program::Kind::Action: break;
    case Program::Kind::Lock:
    case Program::Kind::Unlock: out.insert(p.name()); break;
    case Program::Kind::Loop: collect_mutexes(p.body(), out); break;
    default:
      collect_mutexes(p.left(), out);
      collect_mutexes(p.right(), out);
  }
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name.front())) return false;
  for (char c : name)
    if (!ident_char(c)) return false;
  return name != "P" && name != "V";
}

Program parse_program(std::string_view text) { return Parser(Lexer(text).run()).program(); }

std::string print_program(const Program& program) {
  std::string out;
  print(program, out);
  return out;
}

std::set<std::string> mutexes_of(const Program& program) {
  std::set<std::string> out;
  collect_mutexes(program, out);
  return out;
}

}  // namespace synreg
