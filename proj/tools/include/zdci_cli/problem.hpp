#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zdci/format.hpp"
#include "zdci/polynomial.hpp"

namespace zdci::cli {

struct NamedIdeal {
  std::string name;
  std::vector<Polynomial> generators;
  SourcePos pos;
};

struct NamedPoints {
  std::string name;
  std::vector<std::vector<Scalar>> points;
  SourcePos pos;
};

struct NamedOrderIdeal {
  std::string name;
  std::vector<Monomial> terms;
  SourcePos pos;
};

// ring Q[x,y] degrevlex;  ring Fp(7)[x] lex;  ring Q(c1,c2)[x,y] deglex;
// ideal I = f1, f2;  points S = (0,0), (1,2);  order O = 1, y, x, x*y;
struct ProblemFile {
  RingPtr ring;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedPoints> point_sets;
  std::vector<NamedOrderIdeal> order_ideals;

  const NamedIdeal* find_ideal(std::string_view name) const;
  const NamedPoints* find_points(std::string_view name) const;
  const NamedOrderIdeal* find_order_ideal(std::string_view name) const;
};

// Raises ParseError with the position of the offending token.
ProblemFile parse_problem(std::string_view text);

}  // namespace zdci::cli
