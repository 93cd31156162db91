#include "zdci/scalar.hpp"

#include <atomic>
#include <utility>

#include "zdci/error.hpp"

namespace zdci {

namespace {

std::atomic<std::size_t> g_normalize_threshold{64};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

[[noreturn]] void mismatch() {
  raise(ErrorKind::FieldMismatch, "operands belong to different coefficient fields");
}

}  // namespace

FieldDescriptor FieldDescriptor::rationals() { return {}; }

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p)) {
    raise(ErrorKind::InvalidArgument,
          "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  FieldDescriptor f;
  f.kind = Kind::Prime;
  f.prime = static_cast<std::uint32_t>(p);
  return f;
}

FieldDescriptor FieldDescriptor::function_field(std::vector<std::string> parameters) {
  if (parameters.empty() || parameters.size() > kMaxVariables) {
    raise(ErrorKind::InvalidArgument, "a function field needs 1 to 16 parameters");
  }
  FieldDescriptor f;
  f.kind = Kind::Function;
  f.parameters = std::move(parameters);
  return f;
}

std::string to_string(const FieldDescriptor& field) {
  switch (field.kind) {
    case FieldDescriptor::Kind::Rational: return "Q";
    case FieldDescriptor::Kind::Prime: return "Fp(" + std::to_string(field.prime) + ")";
    case FieldDescriptor::Kind::Function: {
      std::string s = "Q(";
      for (std::size_t i = 0; i < field.parameters.size(); ++i) {
        if (i) s += ",";
        s += field.parameters[i];
      }
      return s + ")";
    }
  }
  return "?";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t fraction_normalize_threshold() noexcept { return g_normalize_threshold.load(); }

void set_fraction_normalize_threshold(std::size_t terms) noexcept {
  g_normalize_threshold.store(terms);
}

Scalar Scalar::zero(const FieldDescriptor& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldDescriptor& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldDescriptor& field, long value) {
  return from_rational(field, mpq_class(value));
}

Scalar Scalar::from_rational(const FieldDescriptor& field, const mpq_class& value) {
  switch (field.kind) {
    case FieldDescriptor::Kind::Rational: return Scalar(value);
    case FieldDescriptor::Kind::Prime: {
      std::uint32_t p = field.prime;
      std::uint32_t den = reduce_mpz(value.get_den(), p);
      if (den == 0) raise(ErrorKind::DivisionByZero, "denominator vanishes modulo p");
      std::uint64_t v = std::uint64_t{reduce_mpz(value.get_num(), p)} * mod_inverse(den, p) % p;
      return Scalar(ModP{static_cast<std::uint32_t>(v), p});
    }
    case FieldDescriptor::Kind::Function: {
      std::size_t m = field.parameters.size();
      return make_fraction(ParamPoly::constant(m, value.get_num()),
                           ParamPoly::constant(m, value.get_den()));
    }
  }
  return {};
}

Scalar Scalar::parameter(const FieldDescriptor& field, std::size_t index) {
  if (field.kind != FieldDescriptor::Kind::Function || index >= field.parameters.size()) {
    raise(ErrorKind::InvalidArgument, "parameter index out of range");
  }
  std::size_t m = field.parameters.size();
  return Scalar(Fraction{ParamPoly::variable(m, index), ParamPoly::constant(m, 1)});
}

Scalar Scalar::fraction(ParamPoly num, ParamPoly den) {
  return make_fraction(std::move(num), std::move(den));
}

Scalar Scalar::make_fraction(ParamPoly num, ParamPoly den) {
  std::size_t m = std::max(num.nvars(), den.nvars());
  if (den.is_zero()) raise(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return Scalar(Fraction{ParamPoly(m), ParamPoly::constant(m, 1)});
  if (num == den) return Scalar(Fraction{ParamPoly::constant(m, 1), ParamPoly::constant(m, 1)});
  if (den.is_constant()) {
    mpz_class d = den.constant_value();
    mpz_class c = num.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (d < 0) g = -g;
    if (g != 1) {
      num = ParamPoly::divexact(num, g);
      den = ParamPoly::constant(m, d / g);
    }
    return Scalar(Fraction{std::move(num), std::move(den)});
  }
  Scalar s(Fraction{std::move(num), std::move(den)});
  const auto& f = s.fraction();
  if (f.num.size() + f.den.size() > fraction_normalize_threshold()) return s.normalized();
  return s;
}

bool Scalar::is_zero() const noexcept {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return std::get<1>(value_).value == 0;
    default: return std::get<2>(value_).num.is_zero();
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_).value == 1;
    default: {
      const auto& f = std::get<2>(value_);
      return f.num == f.den;
    }
  }
}

bool Scalar::is_constant() const {
  if (!is_fraction()) return true;
  const auto& f = fraction();
  return f.num.is_constant() && f.den.is_constant();
}

mpq_class Scalar::constant_value() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_);
    case 1: return mpq_class(std::get<1>(value_).value);
    default: {
      const auto& f = std::get<2>(value_);
      if (!is_constant()) raise(ErrorKind::InvalidArgument, "rational function is not constant");
      mpq_class q(f.num.constant_value(), f.den.constant_value());
      q.canonicalize();
      return q;
    }
  }
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: return Scalar(mpq_class(-std::get<0>(value_)));
    case 1: {
      ModP v = std::get<1>(value_);
      v.value = v.value == 0 ? 0 : v.modulus - v.value;
      return Scalar(v);
    }
    default: {
      const auto& f = std::get<2>(value_);
      return Scalar(Fraction{-f.num, f.den});
    }
  }
}

Scalar Scalar::operator+(const Scalar& other) const {
  if (value_.index() != other.value_.index()) mismatch();
  switch (value_.index()) {
    case 0: return Scalar(mpq_class(std::get<0>(value_) + std::get<0>(other.value_)));
    case 1: {
      ModP a = std::get<1>(value_);
      ModP b = std::get<1>(other.value_);
      if (a.modulus != b.modulus) mismatch();
      std::uint64_t s = std::uint64_t{a.value} + b.value;
      if (s >= a.modulus) s -= a.modulus;
      return Scalar(ModP{static_cast<std::uint32_t>(s), a.modulus});
    }
    default: {
      const auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(other.value_);
      if (a.num.nvars() != b.num.nvars()) mismatch();
      if (a.den == b.den) return make_fraction(a.num + b.num, a.den);
      return make_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
  }
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  if (value_.index() != other.value_.index()) mismatch();
  switch (value_.index()) {
    case 0: return Scalar(mpq_class(std::get<0>(value_) * std::get<0>(other.value_)));
    case 1: {
      ModP a = std::get<1>(value_);
      ModP b = std::get<1>(other.value_);
      if (a.modulus != b.modulus) mismatch();
      std::uint64_t s = std::uint64_t{a.value} * b.value % a.modulus;
      return Scalar(ModP{static_cast<std::uint32_t>(s), a.modulus});
    }
    default: {
      const auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(other.value_);
      if (a.num.nvars() != b.num.nvars()) mismatch();
      if (a.num.is_zero() || b.num.is_zero()) {
        return make_fraction(ParamPoly(a.num.nvars()), ParamPoly::constant(a.num.nvars(), 1));
      }
      return make_fraction(a.num * b.num, a.den * b.den);
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
  switch (value_.index()) {
    case 0: return Scalar(mpq_class(1 / std::get<0>(value_)));
    case 1: {
      ModP a = std::get<1>(value_);
      return Scalar(ModP{mod_inverse(a.value, a.modulus), a.modulus});
    }
    default: {
      const auto& a = std::get<2>(value_);
      ParamPoly num = a.den;
      ParamPoly den = a.num;
      if (den.leading_coeff() < 0) {
        num = -num;
        den = -den;
      }
      return make_fraction(std::move(num), std::move(den));
    }
  }
}

Scalar Scalar::operator/(const Scalar& other) const {
  if (value_.index() != other.value_.index()) mismatch();
  return *this * other.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
  if (value_.index() != other.value_.index()) return false;
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == std::get<0>(other.value_);
    case 1: {
      ModP a = std::get<1>(value_);
      ModP b = std::get<1>(other.value_);
      return a.value == b.value && a.modulus == b.modulus;
    }
    default: {
      const auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(other.value_);
      if (a.num == b.num && a.den == b.den) return true;
      return a.num * b.den == b.num * a.den;
    }
  }
}

Scalar Scalar::normalized() const {
  if (!is_fraction()) return *this;
  const auto& f = fraction();
  std::size_t m = f.num.nvars();
  if (f.num.is_zero()) return Scalar(Fraction{ParamPoly(m), ParamPoly::constant(m, 1)});
  ParamPoly g = ParamPoly::gcd(f.num, f.den);
  ParamPoly num = ParamPoly::divexact(f.num, g);
  ParamPoly den = ParamPoly::divexact(f.den, g);
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(Fraction{std::move(num), std::move(den)});
}

}  // namespace zdci
