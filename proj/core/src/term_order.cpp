#include "zdci/term_order.hpp"

namespace zdci {

namespace {

int compare_lex(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

long partial_degree(const Monomial& m, std::size_t from, std::size_t to) {
  long d = 0;
  for (std::size_t i = from; i < to; ++i) d += m[i];
  return d;
}

int compare_range(OrderKind kind, const Monomial& a, const Monomial& b, std::size_t from,
                  std::size_t to) {
  if (kind != OrderKind::Lex) {
    long da = from == 0 && to == a.size() ? static_cast<long>(a.degree())
                                          : partial_degree(a, from, to);
    long db = from == 0 && to == b.size() ? static_cast<long>(b.degree())
                                          : partial_degree(b, from, to);
    if (da != db) return da > db ? 1 : -1;
  }
  if (kind == OrderKind::DegRevLex) {
    for (std::size_t i = to; i > from; --i) {
      if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
    }
    return 0;
  }
  return compare_lex(a, b, from, to);
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  std::size_t n = a.size();
  if (block == 0) return compare_range(kind, a, b, 0, n);
  if (int c = compare_lex(a, b, 0, block)) return c;
  return compare_range(kind, a, b, block, n);
}

std::string to_string(const TermOrder& order) {
  std::string base;
  switch (order.kind) {
    case OrderKind::Lex: base = "lex"; break;
    case OrderKind::DegLex: base = "deglex"; break;
    case OrderKind::DegRevLex: base = "degrevlex"; break;
  }
  if (order.block == 0) return base;
  return "elim(" + std::to_string(order.block) + "," + base + ")";
}

std::optional<TermOrder> parse_term_order(std::string_view name) {
  if (name == "lex") return TermOrder::lex();
  if (name == "deglex") return TermOrder::deglex();
  if (name == "degrevlex") return TermOrder::degrevlex();
  return std::nullopt;
}

}  // namespace zdci
