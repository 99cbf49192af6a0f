#pragma once

// Small arithmetic expressions for black-box maps on the command line:
// rational constants, variables x y z w or x1..x9, + - * /, nonnegative
// integer powers, parentheses and abs().

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "weil/rational.hpp"

namespace weil {

class Expression {
 public:
  /// Throws ParseError with the offending position.
  static Expression parse(std::string_view text);

  /// Throws DomainError on division by zero or a missing variable.
  Rational evaluate(std::span<const Rational> x) const;

  /// Number of variables referenced: max index + 1 (0 for constants).
  int arity() const { return arity_; }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  int arity_ = 0;
  std::string text_;
};

}  // namespace weil
