#include "zdci/param_poly.hpp"

#include <algorithm>
#include <utility>

#include "zdci/error.hpp"
#include "zdci/term_order.hpp"

namespace zdci {

namespace {

const TermOrder kParamOrder = TermOrder::degrevlex();

bool term_greater(const ParamPoly::Term& a, const ParamPoly::Term& b) {
  return kParamOrder.compare(a.mono, b.mono) > 0;
}

// Dense univariate view: coefficient k multiplies c_var^k.
using Dense = std::vector<ParamPoly>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense to_dense(const ParamPoly& a, std::size_t var) {
  std::size_t n = a.nvars();
  std::vector<std::vector<ParamPoly::Term>> buckets(a.degree_in(var) + 1);
  for (const auto& t : a.terms()) {
    Monomial m = t.mono;
    unsigned k = m[var];
    m.set(var, 0);
    buckets[k].push_back({m, t.coeff});
  }
  Dense out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(ParamPoly::from_terms(n, std::move(b)));
  trim(out);
  return out;
}

ParamPoly from_dense(const Dense& p, std::size_t nvars, std::size_t var) {
  std::vector<ParamPoly::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (const auto& t : p[k].terms()) {
      Monomial m = t.mono;
      m.set(var, k);
      terms.push_back({m, t.coeff});
    }
  }
  return ParamPoly::from_terms(nvars, std::move(terms));
}

ParamPoly dense_content(const Dense& p) {
  ParamPoly g(p.front().nvars());
  for (const auto& c : p) {
    g = ParamPoly::gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

Dense dense_divexact(const Dense& p, const ParamPoly& d) {
  Dense out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(ParamPoly::divexact(c, d));
  return out;
}

ParamPoly power(const ParamPoly& base, int e) {
  ParamPoly r = ParamPoly::constant(base.nvars(), 1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

// lc(B)^(deg A - deg B + 1) * A reduced modulo B.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const ParamPoly& lcb = b.back();
  int db = degree(b);
  int extra = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    ParamPoly lca = a.back();
    int shift = degree(a) - db;
    for (auto& c : a) c = c * lcb;
    for (int k = 0; k <= db; ++k) a[k + shift] = a[k + shift] - lca * b[k];
    trim(a);
    --extra;
  }
  if (extra > 0) {
    ParamPoly f = power(lcb, extra);
    for (auto& c : a) c = c * f;
  }
  return a;
}

Dense subresultant_gcd(Dense a, Dense b) {
  if (degree(b) > degree(a)) std::swap(a, b);
  std::size_t n = a.front().nvars();
  ParamPoly ca = dense_content(a);
  ParamPoly cb = dense_content(b);
  ParamPoly d = ParamPoly::gcd(ca, cb);
  a = dense_divexact(a, ca);
  b = dense_divexact(b, cb);
  ParamPoly g = ParamPoly::constant(n, 1);
  ParamPoly h = ParamPoly::constant(n, 1);
  while (true) {
    int delta = degree(a) - degree(b);
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) {
      b = Dense{ParamPoly::constant(n, 1)};
      break;
    }
    a = std::move(b);
    b = dense_divexact(r, g * power(h, delta));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = ParamPoly::divexact(power(g, delta), power(h, delta - 1));
    }
  }
  ParamPoly cg = dense_content(b);
  Dense out = dense_divexact(b, cg);
  for (auto& c : out) c = c * d;
  return out;
}

ParamPoly positive_leading(ParamPoly p) {
  if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
  return p;
}

}  // namespace

ParamPoly ParamPoly::constant(std::size_t nvars, const mpz_class& value) {
  ParamPoly p(nvars);
  if (value != 0) p.terms_.push_back({Monomial(nvars), value});
  return p;
}

ParamPoly ParamPoly::variable(std::size_t nvars, std::size_t index) {
  ParamPoly p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), mpz_class(1)});
  return p;
}

ParamPoly ParamPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  ParamPoly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

mpz_class ParamPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.back().mono.is_one() ? terms_.back().coeff : mpz_class(0);
}

unsigned ParamPoly::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& other) const {
  ParamPoly r(std::max(nvars_, other.nvars_));
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    int c = kParamOrder.compare(i->mono, j->mono);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      mpz_class s = i->coeff + j->coeff;
      if (s != 0) r.terms_.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, other.terms_.end());
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& other) const { return *this + (-other); }

ParamPoly ParamPoly::operator*(const ParamPoly& other) const {
  if (is_zero() || other.is_zero()) return ParamPoly(std::max(nvars_, other.nvars_));
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::max(nvars_, other.nvars_), std::move(prod));
}

ParamPoly ParamPoly::operator*(const mpz_class& scalar) const {
  if (scalar == 0) return ParamPoly(nvars_);
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= scalar;
  return r;
}

bool ParamPoly::operator==(const ParamPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

mpz_class ParamPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ParamPoly ParamPoly::divexact(const ParamPoly& a, const mpz_class& b) {
  if (b == 0) raise(ErrorKind::DivisionByZero, "division of parameter polynomial by zero");
  ParamPoly r = a;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), b.get_mpz_t())) {
      raise(ErrorKind::InvalidArgument, "inexact integer division of parameter polynomial");
    }
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), b.get_mpz_t());
  }
  return r;
}

ParamPoly ParamPoly::divexact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division of parameter polynomial by zero");
  if (b.is_constant()) return divexact(a, b.constant_value());
  std::size_t n = std::max(a.nvars_, b.nvars_);
  std::vector<Term> quotient;
  ParamPoly rem = a;
  const Term& lb = b.terms_.front();
  while (!rem.is_zero()) {
    const Term& lr = rem.terms_.front();
    if (!lb.mono.divides(lr.mono) ||
        !mpz_divisible_p(lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) {
      raise(ErrorKind::InvalidArgument, "inexact division of parameter polynomials");
    }
    Term q{lr.mono / lb.mono, 0};
    mpz_divexact(q.coeff.get_mpz_t(), lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
    ParamPoly step(n);
    step.terms_.reserve(b.terms_.size());
    for (const auto& t : b.terms_) step.terms_.push_back({t.mono * q.mono, t.coeff * q.coeff});
    rem = rem - step;
    quotient.push_back(std::move(q));
  }
  return from_terms(n, std::move(quotient));
}

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
  std::size_t n = std::max(a.nvars_, b.nvars_);
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return constant(n, g);
  }
  std::size_t var = 0;
  bool found = false;
  for (std::size_t v = n; v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = v;
      found = true;
      break;
    }
  }
  if (!found) return constant(n, 1);
  if (a.degree_in(var) == 0) return gcd(a, dense_content(to_dense(b, var)));
  if (b.degree_in(var) == 0) return gcd(dense_content(to_dense(a, var)), b);
  Dense g = subresultant_gcd(to_dense(a, var), to_dense(b, var));
  return positive_leading(from_dense(g, n, var));
}

mpq_class ParamPoly::evaluate(std::span<const mpq_class> values) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= values[i];
    }
    sum += v;
  }
  return sum;
}

std::string ParamPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace zdci
