#include "zdci/format.hpp"

#include <cctype>
#include <utility>

namespace zdci {

Lexer::Lexer(std::string_view text) {
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.pos = pos;
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = TokenKind::Number;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - start);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      tok.kind = TokenKind::Identifier;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - start);
    } else if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
      tok.kind = TokenKind::Symbol;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    tokens_.push_back(std::move(tok));
  }
  Token end;
  end.pos = pos;
  tokens_.push_back(end);
}

const Token& Lexer::peek(std::size_t ahead) const {
  return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
}

Token Lexer::next() {
  Token t = peek();
  if (index_ + 1 < tokens_.size()) ++index_;
  return t;
}

bool Lexer::accept(std::string_view symbol) {
  if (peek().kind == TokenKind::Symbol && peek().text == symbol) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect(std::string_view symbol) {
  if (!accept(symbol)) {
    const Token& t = peek();
    fail("expected '" + std::string(symbol) + "' but found " +
         (t.kind == TokenKind::End ? std::string("end of input") : "'" + t.text + "'"));
  }
}

Token Lexer::expect_identifier(std::string_view what) {
  if (peek().kind != TokenKind::Identifier) fail("expected " + std::string(what));
  return next();
}

void Lexer::fail(const std::string& message) const { throw ParseError(peek().pos, message); }

namespace {

class ExpressionParser {
 public:
  ExpressionParser(Lexer& lexer, const RingPtr& ring) : lex_(lexer), ring_(ring) {}

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (lex_.accept("-")) {
      negate = true;
    } else {
      lex_.accept("+");
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (lex_.accept("+")) {
        acc += term();
      } else if (lex_.accept("-")) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (lex_.accept("*")) {
        acc = acc * power();
      } else if (lex_.peek().kind == TokenKind::Symbol && lex_.peek().text == "/") {
        SourcePos pos = lex_.next().pos;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) {
          throw ParseError(pos, "division is only allowed by nonzero constants");
        }
        acc = acc * d.leading_coeff().inverse();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (lex_.accept("^")) {
      const Token& t = lex_.peek();
      if (t.kind != TokenKind::Number) lex_.fail("expected a nonnegative integer exponent");
      if (t.text.size() > 5 || std::stoul(t.text) > 0xFFFFu) lex_.fail("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(lex_.next().text));
      base = base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = lex_.peek();
    if (t.kind == TokenKind::Number) {
      mpz_class v(lex_.next().text);
      return Polynomial::constant(ring_, Scalar::from_rational(ring_->field(), mpq_class(v)));
    }
    if (t.kind == TokenKind::Identifier) {
      Token id = lex_.next();
      const auto& vars = ring_->variables();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == id.text) return Polynomial::variable(ring_, i);
      }
      const auto& params = ring_->field().parameters;
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] == id.text) {
          return Polynomial::constant(ring_, Scalar::parameter(ring_->field(), i));
        }
      }
      throw ParseError(id.pos, "unknown variable '" + id.text + "'");
    }
    if (lex_.accept("(")) {
      Polynomial inner = expression();
      lex_.expect(")");
      return inner;
    }
    if (lex_.accept("-")) return -atom();
    lex_.fail(t.kind == TokenKind::End ? "unexpected end of input"
                                       : "unexpected token '" + t.text + "'");
  }

  Lexer& lex_;
  const RingPtr& ring_;
};

struct CoeffText {
  bool negative = false;
  bool unit = false;
  std::string magnitude;
};

CoeffText describe(const Scalar& value, const FieldDescriptor& field) {
  CoeffText out;
  Scalar v = value.normalized();
  if (v.is_modp()) {
    out.unit = v.modp().value == 1;
    out.magnitude = std::to_string(v.modp().value);
    return out;
  }
  if (v.is_rational() || v.is_constant()) {
    mpq_class q = v.constant_value();
    out.negative = q < 0;
    mpq_class mag = abs(q);
    out.unit = mag == 1;
    out.magnitude = mag.get_str();
    return out;
  }
  const auto& f = v.fraction();
  ParamPoly num = f.num;
  if (num.leading_coeff() < 0) {
    out.negative = true;
    num = -num;
  }
  out.magnitude = "(" + num.to_string(field.parameters) + ")";
  if (!(f.den.is_constant() && f.den.constant_value() == 1)) {
    out.magnitude += "/(" + f.den.to_string(field.parameters) + ")";
  }
  return out;
}

}  // namespace

Polynomial parse_expression(Lexer& lexer, const RingPtr& ring) {
  return ExpressionParser(lexer, ring).expression();
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Lexer lexer(text);
  Polynomial f = parse_expression(lexer, ring);
  if (!lexer.at_end()) lexer.fail("unexpected token '" + lexer.peek().text + "'");
  return f;
}

std::string to_string(const Scalar& value, const FieldDescriptor& field) {
  CoeffText c = describe(value, field);
  return (c.negative ? "-" : "") + c.magnitude;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    CoeffText c = describe(t.coeff, ring.field());
    if (first) {
      if (c.negative) out += "-";
    } else {
      out += c.negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.variables()[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c.magnitude;
    } else if (c.unit) {
      out += mono;
    } else {
      out += c.magnitude + "*" + mono;
    }
  }
  return out;
}

}  // namespace zdci
