#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "zdci/monomial.hpp"

namespace zdci {

enum class OrderKind { Lex, DegLex, DegRevLex };

// Term ordering with variable precedence x_1 > x_2 > ... > x_n.
// A nonzero block size gives the product ordering used for elimination:
// the first `block` variables are compared lexicographically, ties are broken
// by `kind` on the remaining variables.
struct TermOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block = 0;

  static TermOrder lex() { return {OrderKind::Lex, 0}; }
  static TermOrder deglex() { return {OrderKind::DegLex, 0}; }
  static TermOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static TermOrder elimination(std::size_t block, OrderKind rest) { return {rest, block}; }

  bool is_degree_compatible() const noexcept {
    return block == 0 && kind != OrderKind::Lex;
  }

  // Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  bool operator==(const TermOrder&) const = default;
};

std::string to_string(const TermOrder& order);
std::optional<TermOrder> parse_term_order(std::string_view name);

}  // namespace zdci
