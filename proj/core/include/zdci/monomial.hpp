#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace zdci {

inline constexpr std::size_t kMaxVariables = 16;

// Power product x_1^{e_1} ... x_n^{e_n} with 16-bit exponents stored inline.
// Exponent overflow raises ErrorKind::ExponentOverflow.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint16_t operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned value);

  bool is_one() const noexcept { return degree_ == 0; }
  bool divides(const Monomial& other) const noexcept;
  // Index of the single variable if this is a pure power x_i^k with k >= 1.
  int pure_power_variable() const noexcept;

  Monomial operator*(const Monomial& other) const;
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const noexcept;

  bool operator==(const Monomial& other) const noexcept;
  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace zdci
