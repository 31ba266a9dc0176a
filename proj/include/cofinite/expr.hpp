// Text syntax for elements.
//
//   expr    := term ("*" term)*
//   term    := "inv(" expr ")" | atom | "(" expr ")"
//   atom    := "id" | "a" | "b" | "e(" nat ")" | "ray(" nat ")"
//            | "cn(" nat "," nat ")" | literal
//   literal := "[" (pair ("," pair)*)? "|" nat ".." sign nat "]"
//   pair    := nat ">" nat
//
// Whitespace is ignored between tokens. "*" composes left to right; "a" is
// n -> n+1 and "b" its inverse.

#ifndef COFINITE_EXPR_HPP_
#define COFINITE_EXPR_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "cofinite/element.hpp"

namespace cofinite {

  struct Expr {
    struct Literal {
      Element value;
    };
    struct Named {
      enum class Kind { Id, A, B, Epsilon, Ray, Cn } kind;
      Int i = 0;
      Int j = 0;
    };
    struct Compose {
      std::shared_ptr<Expr const> left;
      std::shared_ptr<Expr const> right;
    };
    struct Invert {
      std::shared_ptr<Expr const> operand;
    };

    std::variant<Literal, Named, Compose, Invert> node;
  };

  // Throws ParseError (with byte offset) on malformed text and
  // Error(DomainError) for literals or named elements that are not valid.
  Expr parse_expression(std::string_view text);

  Element evaluate(Expr const& expr);

  // parse_expression followed by evaluate. Text starting with a brace is read
  // as the JSON form instead.
  Element parse_element(std::string_view text);

  enum class RenderMode { Compact, Json };

  std::string render(Element const& e, RenderMode mode = RenderMode::Compact);

}  // namespace cofinite

#endif  // COFINITE_EXPR_HPP_
