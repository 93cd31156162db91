#include "helpers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zdci/matrix.hpp"
#include "zdci/quotient.hpp"

namespace zdci::testing {

namespace {

std::vector<std::string> names(std::initializer_list<const char*> vars) {
  return {vars.begin(), vars.end()};
}

void monomials_up_to(std::size_t nvars, unsigned d, std::vector<unsigned>& current,
                     std::size_t index, std::vector<Monomial>& out) {
  if (index == nvars) {
    out.emplace_back(std::span<const unsigned>(current));
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    current[index] = e;
    monomials_up_to(nvars, d - e, current, index + 1, out);
  }
  current[index] = 0;
}

}  // namespace

RingPtr ring_q(std::initializer_list<const char*> vars, TermOrder order) {
  return Ring::make(FieldDescriptor::rationals(), names(vars), order);
}

RingPtr ring_fp(std::uint32_t p, std::initializer_list<const char*> vars, TermOrder order) {
  return Ring::make(FieldDescriptor::prime_field(p), names(vars), order);
}

Polynomial poly(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

std::vector<std::string> texts(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  std::vector<Polynomial> divisor{g};
  auto result = divide_with_quotients(f, divisor);
  if (!result.remainder.is_zero())
    throw std::logic_error(to_string(g) + " does not divide " + to_string(f));
  return result.quotients.front();
}

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  RingPtr ring = m[0][0].ring();
  bool negate = false;
  Polynomial previous = Polynomial::from_int(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial(ring);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(numerator, previous);
      }
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial bareiss_minor(const SyzygyMatrix& w, const std::vector<std::size_t>& columns) {
  std::vector<std::vector<Polynomial>> m;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    std::vector<Polynomial> row;
    for (std::size_t c : columns) row.push_back(w.at(i, c));
    m.push_back(std::move(row));
  }
  return bareiss_determinant(std::move(m));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Scalar one = f.ring()->one();
  Polynomial a = f.mul_term(l / f.leading_monomial(), one / f.leading_coeff());
  Polynomial b = g.mul_term(l / g.leading_monomial(), one / g.leading_coeff());
  return a - b;
}

std::size_t truncated_codimension(const std::vector<Polynomial>& gens, unsigned d) {
  RingPtr ring = gens.front().ring();
  const std::size_t n = ring->nvars();
  std::vector<Monomial> basis;
  std::vector<unsigned> scratch(n, 0);
  monomials_up_to(n, d, scratch, 0, basis);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);

  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    for (const auto& t : basis) {
      if (t.degree() + f.degree() > d) continue;
      std::vector<Scalar> row(basis.size(), ring->zero());
      for (const auto& term : f.terms()) row[index.at(term.mono * t)] = term.coeff;
      rows.push_back(std::move(row));
    }
  }
  Matrix m(ring->field(), rows.size(), basis.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m.at(i, j) = rows[i][j];
  return basis.size() - m.rank();
}

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::size_t count_standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars,
                                     unsigned bound) {
  std::size_t count = 0;
  std::vector<unsigned> e(nvars, 0);
  while (true) {
    Monomial t{std::span<const unsigned>(e)};
    if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(t); }))
      ++count;
    std::size_t i = 0;
    while (i < nvars && ++e[i] == bound) e[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

std::optional<Polynomial> specialize(const Polynomial& f, const RingPtr& target,
                                     std::span<const mpq_class> values) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : f.terms()) {
    mpq_class value;
    if (t.coeff.is_fraction()) {
      mpq_class den = t.coeff.fraction().den.evaluate(values);
      if (den == 0) return std::nullopt;
      value = t.coeff.fraction().num.evaluate(values) / den;
    } else {
      value = t.coeff.constant_value();
    }
    terms.push_back({t.mono, Scalar::from_rational(target->field(), value)});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial monomial_polynomial(const RingPtr& ring, const Monomial& m) {
  return Polynomial::term(ring, m, ring->one());
}

long IdealFactory::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Scalar IdealFactory::random_scalar(long lo, long hi) {
  return Scalar::from_int(ring_->field(), uniform(lo, hi));
}

Polynomial IdealFactory::random_polynomial(unsigned max_degree, std::size_t terms,
                                           long coeff_bound) {
  const std::size_t n = ring_->nvars();
  Polynomial out(ring_);
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<unsigned> e(n, 0);
    unsigned budget = static_cast<unsigned>(uniform(0, max_degree));
    for (unsigned b = 0; b < budget; ++b) ++e[static_cast<std::size_t>(uniform(0, n - 1))];
    out += Polynomial::term(ring_, Monomial(std::span<const unsigned>(e)),
                            random_scalar(-coeff_bound, coeff_bound));
  }
  return out;
}

Polynomial IdealFactory::random_linear_form() {
  Polynomial out(ring_);
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    out += Polynomial::variable(ring_, i) * random_scalar(-3, 3);
  return out;
}

std::vector<std::vector<Scalar>> IdealFactory::random_points(std::size_t count, long bound) {
  std::set<std::vector<std::string>> seen;
  std::vector<std::vector<Scalar>> out;
  while (out.size() < count) {
    std::vector<Scalar> point;
    std::vector<std::string> key;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      point.push_back(random_scalar(-bound, bound));
      key.push_back(point.back().constant_value().get_str());
    }
    if (seen.insert(key).second) out.push_back(std::move(point));
  }
  return out;
}

std::vector<Polynomial> IdealFactory::points_ideal(std::size_t count) {
  const long bound = 3;
  std::size_t values = 2 * bound + 1;
  if (ring_->field().characteristic() != 0)
    values = std::min<std::size_t>(values, ring_->field().characteristic());
  std::size_t available = 1;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) available *= values;
  auto pts = random_points(std::min(count, available), bound);
  return vanishing_ideal_of_points(ring_, pts);
}

std::vector<Monomial> IdealFactory::random_monomial_ideal(unsigned max_power) {
  const std::size_t n = ring_->nvars();
  std::vector<unsigned> powers(n);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    powers[i] = static_cast<unsigned>(uniform(1, max_power));
    gens.push_back(Monomial::variable(n, i, powers[i]));
  }
  long extra = uniform(0, 2);
  for (long k = 0; k < extra; ++k) {
    std::vector<unsigned> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<unsigned>(uniform(0, powers[i] - 1));
    Monomial m{std::span<const unsigned>(e)};
    if (!m.is_one()) gens.push_back(m);
  }
  return minimal_monomial_generators(gens);
}

std::vector<Polynomial> IdealFactory::affine_substitution() {
  const std::size_t n = ring_->nvars();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial image = Polynomial::variable(ring_, i) + Polynomial::constant(ring_, random_scalar(-2, 2));
    for (std::size_t j = i + 1; j < n; ++j)
      image += Polynomial::variable(ring_, j) * random_scalar(-2, 2);
    images.push_back(std::move(image));
  }
  return images;
}

std::vector<Polynomial> IdealFactory::transformed_monomial_ideal(unsigned max_power) {
  auto images = affine_substitution();
  std::vector<Polynomial> out;
  for (const auto& m : random_monomial_ideal(max_power))
    out.push_back(monomial_polynomial(ring_, m).substitute(images));
  return out;
}

std::vector<Polynomial> IdealFactory::triangular_ci(unsigned max_power) {
  const std::size_t n = ring_->nvars();
  std::vector<unsigned> powers(n);
  for (auto& a : powers) a = static_cast<unsigned>(uniform(1, max_power));
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial g = monomial_polynomial(ring_, Monomial::variable(n, i, powers[i]));
    long tail = uniform(0, 3);
    for (long k = 0; k < tail; ++k) {
      std::vector<unsigned> e(n, 0);
      for (std::size_t j = i; j < n; ++j)
        e[j] = static_cast<unsigned>(uniform(0, powers[j] - 1));
      g += Polynomial::term(ring_, Monomial(std::span<const unsigned>(e)), random_scalar(-3, 3));
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Polynomial> IdealFactory::intersection_ideal() {
  auto a = points_ideal(static_cast<std::size_t>(uniform(1, 3)));
  auto b = transformed_monomial_ideal(2);
  return ideal_intersect(a, b);
}

RandomIdeal IdealFactory::any() {
  switch (uniform(0, 3)) {
    case 0:
      return {"points", points_ideal(static_cast<std::size_t>(uniform(1, 8)))};
    case 1:
      return {"transformed monomial", transformed_monomial_ideal(3)};
    case 2:
      return {"triangular", triangular_ci(3)};
    default:
      return {"intersection", intersection_ideal()};
  }
}

}  // namespace zdci::testing
