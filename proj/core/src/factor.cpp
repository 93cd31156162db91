#include "zdci/factor.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>
#include <utility>

#include "zdci/error.hpp"

namespace zdci {

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  ztrim(out);
  return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  ztrim(out);
  return out;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zsymmetric(ZPoly a, const mpz_class& m) {
  a = zmod(std::move(a), m);
  mpz_class half = m / 2;
  for (auto& c : a) {
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// Exact quotient a / b over Z for monic b, if b divides a.
std::optional<ZPoly> zdivide_monic(ZPoly a, const ZPoly& b) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    if (a.empty()) return ZPoly{};
    return std::nullopt;
  }
  ZPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    mpz_class c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  ztrim(a);
  if (!a.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

UPoly to_fp(const ZPoly& a, const FieldDescriptor& fp) {
  std::vector<Scalar> v;
  v.reserve(a.size());
  for (const auto& c : a) v.push_back(Scalar::from_rational(fp, mpq_class(c)));
  return UPoly(fp, std::move(v));
}

ZPoly from_fp(const UPoly& a) {
  ZPoly out;
  for (const auto& c : a.coeffs()) out.push_back(mpz_class(c.modp().value));
  ztrim(out);
  return out;
}

ZPoly primitive_integer(const UPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_class d = c.rational().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly out;
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class scaled = c.rational() * den;
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

UPoly to_rational(const ZPoly& a) {
  FieldDescriptor q = FieldDescriptor::rationals();
  std::vector<Scalar> v;
  for (const auto& c : a) v.push_back(Scalar::from_rational(q, mpq_class(c)));
  return UPoly(q, std::move(v)).monic();
}

UPoly random_poly(const FieldDescriptor& fp, int degree_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, fp.prime - 1);
  std::vector<Scalar> v;
  for (int k = 0; k < degree_below; ++k) v.push_back(Scalar::from_int(fp, dist(rng)));
  return UPoly(fp, std::move(v));
}

void equal_degree(const UPoly& g, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldDescriptor& fp = g.field();
  std::uint32_t p = fp.prime;
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  UPoly one = UPoly::constant(fp, Scalar::one(fp));
  while (true) {
    UPoly a = random_poly(fp, g.degree(), rng);
    if (a.degree() < 1) continue;
    UPoly b(fp);
    if (p == 2) {
      UPoly power = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        power = (power * power) % g;
        b = b + power;
      }
    } else {
      b = UPoly::pow_mod(a, (pd - 1) / 2, g) - one;
    }
    UPoly c = UPoly::gcd(b, g);
    if (c.degree() > 0 && c.degree() < g.degree()) {
      equal_degree(c, d, rng, out);
      equal_degree((g / c).monic(), d, rng, out);
      return;
    }
  }
}

std::vector<UPoly> factor_squarefree_fp(const UPoly& f) {
  const FieldDescriptor& fp = f.field();
  std::mt19937_64 rng(0x5eed + fp.prime);
  std::vector<UPoly> out;
  UPoly s = f.monic();
  UPoly x = UPoly::x(fp);
  UPoly h = x % s;
  for (int d = 1; 2 * d <= s.degree(); ++d) {
    h = UPoly::pow_mod(h, mpz_class(fp.prime), s);
    UPoly g = UPoly::gcd(h - x, s);
    if (g.degree() > 0) {
      equal_degree(g, d, rng, out);
      s = (s / g).monic();
      h = h % s;
    }
  }
  if (s.degree() > 0) out.push_back(s);
  return out;
}

std::tuple<UPoly, UPoly, UPoly> extended_gcd(const UPoly& a, const UPoly& b) {
  const FieldDescriptor& f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f, Scalar::one(f)), s1(f);
  UPoly t0(f), t1 = UPoly::constant(f, Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = UPoly::divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Scalar inv = r0.leading_coeff().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& target, const UPoly& g0, const UPoly& h0,
                                  unsigned long p, unsigned steps) {
  const FieldDescriptor& fp = g0.field();
  auto [one, s, t] = extended_gcd(g0, h0);
  ZPoly g = from_fp(g0);
  ZPoly h = from_fp(h0);
  mpz_class pk = p;
  for (unsigned k = 1; k < steps; ++k) {
    ZPoly e = zsub(target, zmul(g, h));
    for (auto& c : e) c /= pk;
    UPoly ep = to_fp(e, fp);
    auto [q, r] = UPoly::divmod(t * ep, g0);
    UPoly dh = s * ep + q * h0;
    ZPoly dg_z = from_fp(r);
    ZPoly dh_z = from_fp(dh);
    for (auto& c : dg_z) c *= pk;
    for (auto& c : dh_z) c *= pk;
    mpz_class next = pk * p;
    g = zmod(zadd(g, dg_z), next);
    h = zmod(zadd(h, dh_z), next);
    pk = next;
  }
  return {g, h};
}

std::vector<ZPoly> hensel_lift(const ZPoly& target, const std::vector<UPoly>& factors,
                               unsigned long p, unsigned steps) {
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, steps);
  if (factors.size() == 1) return {zmod(target, modulus)};
  const FieldDescriptor& fp = factors.front().field();
  UPoly rest = UPoly::constant(fp, Scalar::one(fp));
  for (std::size_t i = 1; i < factors.size(); ++i) rest = rest * factors[i];
  auto [g, h] = lift_pair(target, factors.front(), rest, p, steps);
  std::vector<UPoly> tail(factors.begin() + 1, factors.end());
  std::vector<ZPoly> out{g};
  for (auto& z : hensel_lift(h, tail, p, steps)) out.push_back(std::move(z));
  return out;
}

std::vector<UPoly> factor_squarefree_q(const UPoly& s) {
  ZPoly f = primitive_integer(s);
  int d = static_cast<int>(f.size()) - 1;
  if (d <= 1) return {s.monic()};
  if (d > kRationalDegreeCap) {
    raise(ErrorKind::DegreeCapExceeded,
          "factorization over Q is limited to degree " + std::to_string(kRationalDegreeCap));
  }
  mpz_class lead = f.back();
  ZPoly g(f.size());
  for (int k = 0; k < d; ++k) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(d - 1 - k));
    g[k] = f[k] * power;
  }
  g[d] = 1;

  unsigned long best_p = 0;
  std::vector<UPoly> best;
  int tried = 0;
  for (unsigned long p = 3; tried < 5; p += 2) {
    if (!is_prime(p)) continue;
    FieldDescriptor fp = FieldDescriptor::prime_field(p);
    UPoly gp = to_fp(g, fp);
    if (UPoly::gcd(gp, gp.derivative()).degree() != 0) continue;
    ++tried;
    auto fs = factor_squarefree_fp(gp);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
  }
  if (best.size() == 1) return {s.monic()};

  mpz_class maxc = 0;
  for (const auto& c : g) maxc = std::max<mpz_class>(maxc, abs(c));
  mpz_class bound = maxc * (d + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(d + 1));
  unsigned steps = 1;
  mpz_class modulus = best_p;
  while (modulus <= bound) {
    modulus *= best_p;
    ++steps;
  }
  std::vector<ZPoly> lifted = hensel_lift(g, best, best_p, steps);

  std::vector<ZPoly> found;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly current = g;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool accepted = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      ZPoly prod{1};
      for (std::size_t i : pick) prod = zmod(zmul(prod, lifted[remaining[i]]), modulus);
      prod = zsymmetric(prod, modulus);
      if (auto q = zdivide_monic(current, prod)) {
        found.push_back(prod);
        current = *q;
        for (std::size_t i = size; i-- > 0;) remaining.erase(remaining.begin() + pick[i]);
        accepted = true;
        break;
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == remaining.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!accepted) ++size;
  }
  if (current.size() > 1) found.push_back(current);

  std::vector<UPoly> out;
  for (auto& h : found) {
    mpz_class power = 1;
    for (auto& c : h) {
      c *= power;
      power *= lead;
    }
    out.push_back(to_rational(h));
  }
  return out;
}

int compare_scalars(const Scalar& a, const Scalar& b) {
  if (a.is_modp()) {
    return a.modp().value < b.modp().value ? -1 : (a.modp().value > b.modp().value ? 1 : 0);
  }
  return cmp(a.rational(), b.rational());
}

bool factor_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    int c = compare_scalars(a.coeffs()[k], b.coeffs()[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<Factor> factor_univariate(const UPoly& q) {
  const FieldDescriptor& field = q.field();
  if (field.is_parametric()) {
    raise(ErrorKind::UnsupportedField, "factorization over rational function fields");
  }
  if (q.degree() < 1) raise(ErrorKind::ConstantPolynomial, "cannot factor a constant");
  UPoly s = squarefree_part(q);
  std::vector<UPoly> irreducibles =
      field.kind == FieldDescriptor::Kind::Prime ? factor_squarefree_fp(s) : factor_squarefree_q(s);
  std::sort(irreducibles.begin(), irreducibles.end(), factor_less);
  std::vector<Factor> out;
  for (auto& f : irreducibles) {
    unsigned mult = 0;
    UPoly rest = q;
    while (true) {
      auto [quo, rem] = UPoly::divmod(rest, f);
      if (!rem.is_zero()) break;
      rest = std::move(quo);
      ++mult;
    }
    out.push_back({std::move(f), mult});
  }
  return out;
}

bool is_irreducible(const UPoly& q) {
  if (q.degree() < 1) return false;
  auto fs = factor_univariate(q);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace zdci
