#include "zdci/monomial.hpp"

#include <algorithm>
#include <string>

#include "zdci/error.hpp"

namespace zdci {

namespace {

std::uint16_t checked_exponent(unsigned long value) {
  if (value > 0xFFFFu) {
    raise(ErrorKind::ExponentOverflow,
          "exponent " + std::to_string(value) + " exceeds 16-bit storage");
  }
  return static_cast<std::uint16_t>(value);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVariables) {
    raise(ErrorKind::InvalidArgument,
          "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  degree_ -= exp_[i];
  exp_[i] = checked_exponent(value);
  degree_ += exp_[i];
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

int Monomial::pure_power_variable() const noexcept {
  int found = -1;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = checked_exponent(static_cast<unsigned long>(exp_[i]) + other.exp_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

bool Monomial::operator==(const Monomial& other) const noexcept {
  return nvars_ == other.nvars_ && degree_ == other.degree_ && exp_ == other.exp_;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace zdci
