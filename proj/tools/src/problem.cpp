#include "zdci_cli/problem.hpp"

#include <algorithm>
#include <set>

#include "zdci/term_order.hpp"

namespace zdci::cli {

namespace {

template <typename T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

class ProblemParser {
 public:
  explicit ProblemParser(std::string_view text) : lexer_(text) {}

  ProblemFile parse() {
    while (!lexer_.at_end()) {
      Token keyword = lexer_.expect_identifier("statement keyword");
      if (keyword.text == "ring") {
        if (file_.ring) throw ParseError(keyword.pos, "only one ring declaration is allowed");
        parse_ring();
      } else if (keyword.text == "ideal") {
        require_ring(keyword);
        parse_ideal();
      } else if (keyword.text == "points") {
        require_ring(keyword);
        parse_points();
      } else if (keyword.text == "order") {
        require_ring(keyword);
        parse_order();
      } else {
        throw ParseError(keyword.pos, "unknown statement '" + keyword.text + "'");
      }
    }
    if (!file_.ring) lexer_.fail("missing ring declaration");
    return std::move(file_);
  }

 private:
  void require_ring(const Token& at) {
    if (!file_.ring) throw ParseError(at.pos, "ring declaration must come first");
  }

  std::vector<std::string> name_list(const char* closer) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    do {
      Token t = lexer_.expect_identifier("name");
      if (!seen.insert(t.text).second || used_.count(t.text)) {
        throw ParseError(t.pos, "duplicate name '" + t.text + "'");
      }
      names.push_back(t.text);
    } while (lexer_.accept(","));
    lexer_.expect(closer);
    for (const auto& n : names) used_.insert(n);
    return names;
  }

  void parse_ring() {
    Token field_name = lexer_.expect_identifier("field");
    FieldDescriptor field;
    if (field_name.text == "Q") {
      if (lexer_.accept("(")) {
        field = FieldDescriptor::function_field(name_list(")"));
      } else {
        field = FieldDescriptor::rationals();
      }
    } else if (field_name.text == "Fp") {
      lexer_.expect("(");
      Token p = lexer_.next();
      if (p.kind != TokenKind::Number) throw ParseError(p.pos, "expected a prime");
      try {
        field = FieldDescriptor::prime_field(std::stoull(p.text));
      } catch (const Error& e) {
        throw ParseError(p.pos, e.what());
      } catch (const std::exception&) {
        throw ParseError(p.pos, "prime out of range");
      }
      lexer_.expect(")");
    } else {
      throw ParseError(field_name.pos, "unknown field '" + field_name.text + "'");
    }
    lexer_.expect("[");
    std::vector<std::string> vars = name_list("]");
    TermOrder order = TermOrder::degrevlex();
    if (lexer_.peek().kind == TokenKind::Identifier) {
      Token o = lexer_.next();
      auto parsed = parse_term_order(o.text);
      if (!parsed) throw ParseError(o.pos, "unknown ordering '" + o.text + "'");
      order = *parsed;
    }
    lexer_.expect(";");
    file_.ring = Ring::make(std::move(field), std::move(vars), order);
  }

  Token definition_name() {
    Token name = lexer_.expect_identifier("name");
    if (file_.find_ideal(name.text) || file_.find_points(name.text) ||
        file_.find_order_ideal(name.text)) {
      throw ParseError(name.pos, "duplicate definition '" + name.text + "'");
    }
    lexer_.expect("=");
    if (lexer_.peek().kind == TokenKind::Symbol && lexer_.peek().text == ";") {
      throw ParseError(lexer_.peek().pos, "empty definition");
    }
    return name;
  }

  void parse_ideal() {
    Token name = definition_name();
    NamedIdeal ideal{name.text, {}, name.pos};
    do {
      ideal.generators.push_back(parse_expression(lexer_, file_.ring));
    } while (lexer_.accept(","));
    lexer_.expect(";");
    file_.ideals.push_back(std::move(ideal));
  }

  void parse_points() {
    Token name = definition_name();
    NamedPoints set{name.text, {}, name.pos};
    do {
      SourcePos at = lexer_.peek().pos;
      lexer_.expect("(");
      std::vector<Scalar> point;
      do {
        SourcePos coord_at = lexer_.peek().pos;
        Polynomial c = parse_expression(lexer_, file_.ring);
        if (!c.is_constant()) throw ParseError(coord_at, "coordinate must be a constant");
        point.push_back(c.is_zero() ? file_.ring->zero() : c.leading_coeff());
      } while (lexer_.accept(","));
      lexer_.expect(")");
      if (point.size() != file_.ring->nvars()) {
        throw ParseError(at, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                 std::to_string(file_.ring->nvars()));
      }
      set.points.push_back(std::move(point));
    } while (lexer_.accept(","));
    lexer_.expect(";");
    file_.point_sets.push_back(std::move(set));
  }

  void parse_order() {
    Token name = definition_name();
    NamedOrderIdeal order{name.text, {}, name.pos};
    do {
      SourcePos at = lexer_.peek().pos;
      Polynomial t = parse_expression(lexer_, file_.ring);
      if (t.size() != 1 || !t.leading_coeff().is_one()) {
        throw ParseError(at, "expected a term such as 1, x or x*y^2");
      }
      order.terms.push_back(t.leading_monomial());
    } while (lexer_.accept(","));
    lexer_.expect(";");
    file_.order_ideals.push_back(std::move(order));
  }

  Lexer lexer_;
  ProblemFile file_;
  std::set<std::string> used_;
};

}  // namespace

const NamedIdeal* ProblemFile::find_ideal(std::string_view name) const {
  return find_named(ideals, name);
}

const NamedPoints* ProblemFile::find_points(std::string_view name) const {
  return find_named(point_sets, name);
}

const NamedOrderIdeal* ProblemFile::find_order_ideal(std::string_view name) const {
  return find_named(order_ideals, name);
}

ProblemFile parse_problem(std::string_view text) {
  return ProblemParser(text).parse();
}

}  // namespace zdci::cli
