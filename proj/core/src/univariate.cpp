#include "zdci/univariate.hpp"

#include <utility>

#include "zdci/error.hpp"
#include "zdci/format.hpp"

namespace zdci {

UPoly::UPoly(FieldDescriptor field) : field_(std::move(field)) {}

UPoly::UPoly(FieldDescriptor field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::constant(const FieldDescriptor& field, Scalar c) {
  return UPoly(field, {std::move(c)});
}

UPoly UPoly::monomial(const FieldDescriptor& field, std::size_t degree, Scalar c) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(field));
  v[degree] = std::move(c);
  return UPoly(field, std::move(v));
}

UPoly UPoly::x(const FieldDescriptor& field) { return monomial(field, 1, Scalar::one(field)); }

UPoly UPoly::from_polynomial(const Polynomial& f, std::size_t var) {
  const FieldDescriptor& field = f.ring()->field();
  std::vector<Scalar> v;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != t.mono[var]) {
      raise(ErrorKind::InvalidArgument, "polynomial is not univariate in the given variable");
    }
    std::size_t d = t.mono[var];
    if (v.size() <= d) v.resize(d + 1, Scalar::zero(field));
    v[d] = t.coeff;
  }
  return UPoly(field, std::move(v));
}

Scalar UPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UPoly UPoly::operator+(const UPoly& other) const {
  std::vector<Scalar> v(std::max(coeffs_.size(), other.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] = coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) v[k] += other.coeffs_[k];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& other) const { return *this + (-other); }

UPoly UPoly::operator*(const UPoly& other) const {
  if (is_zero() || other.is_zero()) return UPoly(field_);
  std::vector<Scalar> v(coeffs_.size() + other.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (!other.coeffs_[j].is_zero()) v[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator*(const Scalar& s) const {
  UPoly out = *this;
  for (auto& c : out.coeffs_) c *= s;
  out.trim();
  return out;
}

bool UPoly::operator==(const UPoly& other) const { return coeffs_ == other.coeffs_; }

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(a.field_), a};
  std::vector<Scalar> r = a.coeffs_;
  std::size_t db = b.coeffs_.size() - 1;
  std::vector<Scalar> q(r.size() - db, Scalar::zero(a.field_));
  Scalar inv = b.leading_coeff().inverse();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    Scalar f = r[k] * inv;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) {
      if (!b.coeffs_[j].is_zero()) r[k - db + j] -= f * b.coeffs_[j];
    }
  }
  r.resize(db);
  return {UPoly(a.field_, std::move(q)), UPoly(a.field_, std::move(r))};
}

UPoly UPoly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> v;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    v.push_back(coeffs_[k] * Scalar::from_int(field_, static_cast<long>(k)));
  }
  return UPoly(field_, std::move(v));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly UPoly::pow_mod(const UPoly& base, const mpz_class& e, const UPoly& m) {
  UPoly result = constant(base.field_, Scalar::one(base.field_)) % m;
  UPoly b = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

Polynomial UPoly::compose(const Polynomial& arg) const {
  const RingPtr& ring = arg.ring();
  Polynomial acc(ring);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * arg + Polynomial::constant(ring, coeffs_[k]);
  }
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  RingPtr ring = Ring::make(field_, {var});
  return zdci::to_string(compose(Polynomial::variable(ring, 0)));
}

UPoly squarefree_part(const UPoly& f) {
  if (f.is_zero()) raise(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  const FieldDescriptor& field = f.field();
  if (f.degree() == 0) return UPoly::constant(field, Scalar::one(field));
  UPoly d = f.derivative();
  std::uint32_t p = field.characteristic();
  if (d.is_zero()) {
    std::vector<Scalar> root;
    for (std::size_t k = 0; k < f.coeffs().size(); k += p) root.push_back(f.coeffs()[k]);
    return squarefree_part(UPoly(field, std::move(root)));
  }
  UPoly g = UPoly::gcd(f, d);
  UPoly w = (f / g).monic();
  if (p == 0) return w;
  UPoly y = g;
  while (true) {
    UPoly common = UPoly::gcd(y, w);
    if (common.degree() <= 0) break;
    y = y / common;
  }
  if (y.degree() <= 0) return w;
  std::vector<Scalar> root;
  for (std::size_t k = 0; k < y.coeffs().size(); k += p) root.push_back(y.coeffs()[k]);
  return (w * squarefree_part(UPoly(field, std::move(root)))).monic();
}

}  // namespace zdci
