#ifndef QSL3_TEXTIO_HPP
#define QSL3_TEXTIO_HPP

/// Text grammar shared by the command-line front end and the tests:
/// expressions over divided-power words with optional coefficient literals
/// and grading shifts, plus an S-expression reader for diagram trees.
///
/// Grammar:
///   expr   := '0' | term (('+' | '(+)') term)*
///   term   := [ '(' laurent ')' ] letter+ [ '{' int '}' ]
///   letter := ('1' | '2') '^' uint
///
/// Letters are whitespace-separated; the unit word renders as "1^0". At the
/// algebra level the shift is ignored; at the object level the coefficient
/// must have nonnegative integer coefficients and acts as a multiset of
/// extra shifts.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qsl3/thick.hpp"
#include "qsl3/u3algebra.hpp"
#include "qsl3/u3category.hpp"

namespace qsl3 {

/// Syntax error carrying the byte offset and the expected token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : std::runtime_error("parse error at position " + std::to_string(position) +
                           ": expected " + expected),
        position_(position),
        expected_(expected) {}

  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Parse onto the word algebra: same-color neighbors merge with their
/// quantum-binomial factor, shifts are dropped.
[[nodiscard]] AlgElem parseAlgebraExpression(const std::string& src);

/// Parse onto graded objects: same-color neighbors merge into the shift
/// multiset of the pair decomposition, and coefficients (which must lie in
/// N[q,q^-1]) act as shifted multiplicities.
[[nodiscard]] GradedObject parseObjectExpression(const std::string& src);

/// Grammar-conformant printers; parse(print(x)) == x. Zero prints as "0".
[[nodiscard]] std::string printAlgebra(const AlgElem& value);
[[nodiscard]] std::string printCanonical(const CanonExpansion& value);
[[nodiscard]] std::string printObject(const GradedObject& value);
[[nodiscard]] std::string printIndecomposables(const IndecompSum& value);

/// Reader for the S-expression forms produced by ThickDiagram::str():
/// (id c t), (schur c t (p ...)), (cross c t c t), (split c a b),
/// (merge c a b), (h d ...), (v d ...), (scale k d).
[[nodiscard]] ThickDiagram parseThickDiagram(const std::string& src);

}  // namespace qsl3

#endif  // QSL3_TEXTIO_HPP
