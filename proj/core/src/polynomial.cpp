#include "zdci/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "zdci/error.hpp"

namespace zdci {

Ring::Ring(FieldDescriptor field, std::vector<std::string> variables, TermOrder order)
    : field_(std::move(field)), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables) {
    raise(ErrorKind::InvalidArgument,
          "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

RingPtr Ring::make(FieldDescriptor field, std::vector<std::string> variables, TermOrder order) {
  return std::make_shared<const Ring>(std::move(field), std::move(variables), order);
}

RingPtr Ring::with_order(TermOrder order) const {
  if (order == order_) return shared_from_this();
  return make(field_, variables_, order);
}

bool Ring::operator==(const Ring& other) const {
  return this == &other ||
         (order_ == other.order_ && variables_ == other.variables_ && field_ == other.field_);
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) {
    raise(ErrorKind::RingMismatch, "polynomials belong to different rings");
  }
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, Scalar value) {
  Polynomial p(ring);
  if (!value.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(value)});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long value) {
  Scalar s = ring->scalar(value);
  return constant(std::move(ring), std::move(s));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->nvars(), index);
  Scalar one = ring->one();
  return term(std::move(ring), m, std::move(one));
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, Scalar coeff) {
  Polynomial p(std::move(ring));
  if (!coeff.is_zero()) p.terms_.push_back({mono, std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  Polynomial p(std::move(ring));
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

unsigned Polynomial::degree() const {
  if (terms_.empty()) raise(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two sorted term lists computing a + sign * b.
std::vector<Polynomial::Term> merge_terms(const Ring& ring,
                                          const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    int c = ring.compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, subtract ? -j->coeff : j->coeff});
      ++j;
    } else {
      Scalar s = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!s.is_zero()) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) out.push_back({j->mono, subtract ? -j->coeff : j->coeff});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(*this, other);
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, other.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(*this, other);
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, other.terms_, true);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(*this, other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  if (other.terms_.size() == 1) return mul_term(other.terms_[0].mono, other.terms_[0].coeff);
  if (terms_.size() == 1) return other.mul_term(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::operator*(const Scalar& scalar) const {
  if (scalar.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = t.coeff * scalar;
    if (!c.is_zero()) r.terms_.push_back({t.mono, std::move(c)});
  }
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& mono, const Scalar& coeff) const {
  Polynomial r(ring_);
  if (coeff.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = t.coeff * coeff;
    if (!c.is_zero()) r.terms_.push_back({t.mono * mono, std::move(c)});
  }
  return r;
}

void Polynomial::sub_mul(const Scalar& coeff, const Monomial& mono, const Polynomial& g) {
  Polynomial scaled = g.mul_term(mono, coeff);
  terms_ = merge_terms(*ring_, terms_, scaled.terms_, true);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

void Polynomial::pop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || !(terms_[i].coeff == other.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars() || !(target->field() == ring_->field())) {
    raise(ErrorKind::RingMismatch, "target ring has different variables or field");
  }
  if (target == ring_ || target->order() == ring_->order()) {
    Polynomial p = *this;
    p.ring_ = target;
    return p;
  }
  return from_terms(target, terms_);
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  Scalar sum = ring_->zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() != ring_->nvars()) {
    raise(ErrorKind::InvalidArgument, "substitution needs one value per variable");
  }
  const RingPtr& target = values.empty() ? ring_ : values.front().ring();
  Polynomial sum(target);
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] > 0) v = v * values[i].pow(t.mono[i]);
    }
    sum += v;
  }
  return sum;
}

bool Polynomial::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff.is_zero()) return false;
    if (terms_[i].mono.size() != ring_->nvars()) return false;
    if (i > 0 && ring_->compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

Polynomial degree_form(const Polynomial& f) {
  unsigned d = f.degree();
  std::vector<Polynomial::Term> top;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() == d) top.push_back(t);
  }
  return Polynomial::from_terms(f.ring(), std::move(top));
}

Polynomial homogenize(const Polynomial& f, const std::string& new_var_name) {
  unsigned d = f.degree();
  const Ring& r = *f.ring();
  std::vector<std::string> names{new_var_name};
  names.insert(names.end(), r.variables().begin(), r.variables().end());
  RingPtr target = Ring::make(r.field(), std::move(names), r.order());
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    m.set(0, d - t.mono.degree());
    for (std::size_t i = 0; i < r.nvars(); ++i) m.set(i + 1, t.mono[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, std::size_t index) {
  const Ring& r = *f.ring();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    if (i != index) names.push_back(r.variables()[i]);
  }
  RingPtr target = Ring::make(r.field(), std::move(names), r.order());
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0, j = 0; i < r.nvars(); ++i) {
      if (i != index) m.set(j++, t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         std::span<const int> image) {
  const Ring& r = *f.ring();
  if (image.size() != r.nvars() || !(target->field() == r.field())) {
    raise(ErrorKind::RingMismatch, "incompatible variable map");
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < r.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (image[i] < 0) raise(ErrorKind::RingMismatch, "variable has no image in target ring");
      m.set(static_cast<std::size_t>(image[i]), m[image[i]] + t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
  const RingPtr& ring = f.ring();
  if (index >= ring->nvars()) raise(ErrorKind::InvalidArgument, "variable index out of range");
  std::vector<Polynomial::Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[index];
    if (e == 0) continue;
    Scalar c = t.coeff * ring->scalar(static_cast<long>(e));
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    terms.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> split_by_variables(const Polynomial& h) {
  const RingPtr& ring = h.ring();
  if (h.is_zero() || h.is_constant()) {
    raise(ErrorKind::ConstantPolynomial, "cannot split a constant polynomial by variables");
  }
  if (!h.is_homogeneous()) raise(ErrorKind::NotHomogeneous, "polynomial is not homogeneous");
  std::size_t n = ring->nvars();
  std::vector<std::vector<Polynomial::Term>> parts(n);
  for (const auto& t : h.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] == 0) continue;
      Monomial m = t.mono;
      m.set(i, m[i] - 1);
      parts[i].push_back({m, t.coeff});
      break;
    }
  }
  std::vector<Polynomial> out;
  out.reserve(n);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

}  // namespace zdci
