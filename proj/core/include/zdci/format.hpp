#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zdci/error.hpp"
#include "zdci/polynomial.hpp"

namespace zdci {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message)
      : Error(ErrorKind::Parse, std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                                    ": " + message),
        pos_(pos) {}

  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

enum class TokenKind { End, Identifier, Number, Symbol };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
};

// Tokenizer for the polynomial and problem-file grammar. `//` starts a
// comment running to the end of the line.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool accept(std::string_view symbol);
  void expect(std::string_view symbol);
  Token expect_identifier(std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

// Parses +, -, *, /, ^ and parentheses over the ring's variables and, for
// function fields, its parameter names. Division is only by nonzero
// constants. Stops before ',', ';' or an unmatched ')'.
Polynomial parse_expression(Lexer& lexer, const RingPtr& ring);
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string to_string(const Scalar& value, const FieldDescriptor& field);
// Canonical text: terms in decreasing ring order; round-trips through
// parse_polynomial.
std::string to_string(const Polynomial& f);

}  // namespace zdci
