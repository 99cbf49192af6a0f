#include "weil/expression.hpp"

#include <cctype>
#include <vector>

#include "weil/error.hpp"

namespace weil {

struct Expression::Node {
  enum class Op { constant, variable, add, sub, mul, div, neg, pow, abs } op;
  Rational value;
  int index = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  return std::make_shared<Expression::Node>(Expression::Node{op, Rational(0), 0, std::move(a), std::move(b)});
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

  int arity = 0;

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make(Op::add, lhs, term());
      else if (accept('-'))
        lhs = make(Op::sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(Op::mul, lhs, unary());
      else if (accept('/'))
        lhs = make(Op::div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 3) fail("exponent too large");
    auto e = make(Op::pow, base);
    auto node = std::const_pointer_cast<Expression::Node>(e);
    node->index = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return e;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto node = std::make_shared<Expression::Node>(Expression::Node{Op::constant, Rational(0), 0, nullptr, nullptr});
      node->value = parse_rational(s_.substr(start, pos_ - start));
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "abs") {
        if (!accept('(')) fail("expected '(' after abs");
        NodePtr e = expr();
        if (!accept(')')) fail("expected ')'");
        return make(Op::abs, e);
      }
      int index = -1;
      if (name == "x") index = 0;
      else if (name == "y") index = 1;
      else if (name == "z") index = 2;
      else if (name == "w") index = 3;
      else if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9') index = name[1] - '1';
      if (index < 0) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      arity = std::max(arity, index + 1);
      auto node = std::make_shared<Expression::Node>(Expression::Node{Op::variable, Rational(0), index, nullptr, nullptr});
      return node;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational eval(const Expression::Node& n, std::span<const Rational> x) {
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::variable:
      if (static_cast<std::size_t>(n.index) >= x.size())
        throw DomainError("expression uses variable " + std::to_string(n.index + 1) + " beyond the input dimension");
      return x[static_cast<std::size_t>(n.index)];
    case Op::add: return eval(*n.a, x) + eval(*n.b, x);
    case Op::sub: return eval(*n.a, x) - eval(*n.b, x);
    case Op::mul: return eval(*n.a, x) * eval(*n.b, x);
    case Op::div: {
      const Rational den = eval(*n.b, x);
      if (is_zero(den)) throw DomainError("division by zero in expression");
      return eval(*n.a, x) / den;
    }
    case Op::neg: return -eval(*n.a, x);
    case Op::pow: {
      const Rational base = eval(*n.a, x);
      Rational r(1);
      for (int i = 0; i < n.index; ++i) r *= base;
      return r;
    }
    case Op::abs: return abs(eval(*n.a, x));
  }
  return 0;
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser p(text);
  Expression e;
  e.root_ = p.parse();
  e.arity_ = p.arity;
  e.text_ = std::string(text);
  return e;
}

Rational Expression::evaluate(std::span<const Rational> x) const { return eval(*root_, x); }

}  // namespace weil
