#include "zdci/quotient.hpp"

#include <algorithm>
#include <utility>

#include "zdci/error.hpp"

namespace zdci {

QuotientRing::QuotientRing(GroebnerBasis basis, std::size_t dimension_cap)
    : basis_(std::move(basis)) {
  monomials_ = standard_monomials(basis_);
  if (monomials_.size() > dimension_cap) {
    raise(ErrorKind::InvalidArgument, "quotient dimension " + std::to_string(monomials_.size()) +
                                          " exceeds the cap of " + std::to_string(dimension_cap));
  }
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
  matrices_.resize(basis_.ring->nvars());
}

std::vector<Scalar> QuotientRing::residue_vector(const Polynomial& f) const {
  const FieldDescriptor& field = ring()->field();
  std::vector<Scalar> v(dimension(), Scalar::zero(field));
  Polynomial r = normal_form(f, basis_);
  for (const auto& t : r.terms()) v[index_.at(t.mono)] = t.coeff;
  return v;
}

Polynomial QuotientRing::from_vector(std::span<const Scalar> v) const {
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = 0; k < v.size() && k < monomials_.size(); ++k) {
    if (!v[k].is_zero()) terms.push_back({monomials_[k], v[k]});
  }
  return Polynomial::from_terms(ring(), std::move(terms));
}

const Matrix& QuotientRing::multiplication_matrix(std::size_t var) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = matrices_.at(var);
  if (!slot) {
    std::size_t mu = dimension();
    auto m = std::make_unique<Matrix>(ring()->field(), mu, mu);
    Polynomial x = Polynomial::variable(ring(), var);
    for (std::size_t k = 0; k < mu; ++k) {
      auto col = residue_vector(x.mul_term(monomials_[k], ring()->one()));
      for (std::size_t i = 0; i < mu; ++i) m->at(i, k) = std::move(col[i]);
    }
    slot = std::move(m);
  }
  return *slot;
}

Matrix QuotientRing::multiplication_matrix(const Polynomial& f) const {
  std::size_t mu = dimension();
  Matrix m(ring()->field(), mu, mu);
  for (std::size_t k = 0; k < mu; ++k) {
    auto col = residue_vector(f.mul_term(monomials_[k], ring()->one()));
    for (std::size_t i = 0; i < mu; ++i) m.at(i, k) = std::move(col[i]);
  }
  return m;
}

UPoly minimal_polynomial(const Polynomial& f, const QuotientRing& quotient) {
  const FieldDescriptor& field = quotient.ring()->field();
  Matrix mf = quotient.multiplication_matrix(f);
  EchelonBasis echelon(field, quotient.dimension());
  std::vector<Scalar> v = quotient.residue_vector(Polynomial::from_int(quotient.ring(), 1));
  for (std::size_t k = 0; k <= quotient.dimension(); ++k) {
    if (auto dep = echelon.insert(v)) {
      std::vector<Scalar> coeffs;
      for (auto& c : *dep) coeffs.push_back(-c);
      coeffs.push_back(Scalar::one(field));
      return UPoly(field, std::move(coeffs));
    }
    v = mf.apply(v);
  }
  raise(ErrorKind::InvalidArgument, "Krylov iteration did not terminate");
}

std::vector<Polynomial> radical_zero_dim(std::span<const Polynomial> generators) {
  if (generators.empty()) raise(ErrorKind::InvalidArgument, "empty generator list");
  const RingPtr& ring = generators.front().ring();
  if (ring->field().is_parametric()) {
    raise(ErrorKind::UnsupportedField, "radicals over rational function fields are not supported");
  }
  GroebnerBasis gb = buchberger(generators);
  if (gb.is_unit()) return gb.elements;
  if (!gb.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  QuotientRing quotient(gb);
  std::vector<Polynomial> gens = gb.elements;
  bool changed = false;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Polynomial x = Polynomial::variable(ring, i);
    UPoly m = minimal_polynomial(x, quotient);
    UPoly s = squarefree_part(m);
    if (s.degree() == m.degree()) continue;
    gens.push_back(s.compose(x));
    changed = true;
  }
  if (!changed) return gb.elements;
  return buchberger(gens).elements;
}

std::vector<Polynomial> vanishing_ideal_of_points(const RingPtr& ring,
                                                  std::span<const std::vector<Scalar>> points) {
  const FieldDescriptor& field = ring->field();
  std::size_t n = ring->nvars();
  for (const auto& p : points) {
    if (p.size() != n) raise(ErrorKind::InvalidArgument, "point has the wrong number of coordinates");
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a] == points[b]) raise(ErrorKind::DuplicatePoint, "points must be distinct");
    }
  }
  if (points.empty()) return {Polynomial::from_int(ring, 1)};

  auto evaluate = [&](const Monomial& t) {
    std::vector<Scalar> v;
    v.reserve(points.size());
    for (const auto& p : points) {
      Scalar acc = Scalar::one(field);
      for (std::size_t i = 0; i < n; ++i) {
        for (unsigned e = 0; e < t[i]; ++e) acc *= p[i];
      }
      v.push_back(std::move(acc));
    }
    return v;
  };

  EchelonBasis echelon(field, points.size());
  std::vector<Monomial> order_ideal;
  std::vector<Polynomial> basis;
  std::vector<Monomial> candidates{Monomial(n)};
  while (!candidates.empty()) {
    auto it = std::min_element(candidates.begin(), candidates.end(),
                               [&](const Monomial& a, const Monomial& b) {
                                 return ring->compare(a, b) < 0;
                               });
    Monomial t = *it;
    candidates.erase(it);
    bool in_lt = std::any_of(basis.begin(), basis.end(), [&](const Polynomial& g) {
      return g.leading_monomial().divides(t);
    });
    if (in_lt) continue;
    std::vector<Scalar> v = evaluate(t);
    if (auto dep = echelon.insert(v)) {
      std::vector<Polynomial::Term> terms{{t, Scalar::one(field)}};
      for (std::size_t k = 0; k < dep->size(); ++k) {
        if (!(*dep)[k].is_zero()) terms.push_back({order_ideal[k], -(*dep)[k]});
      }
      basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
      continue;
    }
    order_ideal.push_back(t);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = t * Monomial::variable(n, i);
      if (std::find(candidates.begin(), candidates.end(), next) == candidates.end()) {
        candidates.push_back(next);
      }
    }
  }
  return basis;
}

}  // namespace zdci
