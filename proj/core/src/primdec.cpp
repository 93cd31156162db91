#include "zdci/primdec.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "zdci/error.hpp"
#include "zdci/factor.hpp"
#include "zdci/format.hpp"
#include "zdci/groebner.hpp"
#include "zdci/quotient.hpp"

namespace zdci {

namespace {

void require_decomposable_field(std::span<const Polynomial> generators) {
  if (generators.empty()) raise(ErrorKind::InvalidArgument, "empty generator list");
  if (generators.front().ring()->field().is_parametric()) {
    raise(ErrorKind::UnsupportedField, "decomposition over rational function fields");
  }
}

MaximalityCertificate decide(const Polynomial& element, const QuotientRing& quotient, bool& done) {
  MaximalityCertificate cert{false, quotient.dimension(), element, minimal_polynomial(element, quotient)};
  done = false;
  if (!is_irreducible(cert.minimal_polynomial)) {
    done = true;
  } else if (static_cast<std::size_t>(cert.minimal_polynomial.degree()) == quotient.dimension()) {
    cert.maximal = true;
    done = true;
  }
  return cert;
}

UPoly power(const UPoly& f, unsigned e) {
  UPoly out = UPoly::constant(f.field(), Scalar::one(f.field()));
  for (unsigned k = 0; k < e; ++k) out = out * f;
  return out;
}

std::string basis_text(const std::vector<Polynomial>& basis) {
  std::string s;
  for (const auto& g : basis) s += to_string(g) + ";";
  return s;
}

class Decomposer {
 public:
  explicit Decomposer(std::uint64_t seed) : seed_(seed) {}

  void split(std::vector<Polynomial> gens) {
    GroebnerBasis gb = buchberger(gens);
    if (gb.is_unit()) return;
    QuotientRing quotient(gb);
    const RingPtr& ring = gb.ring;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      Polynomial x = Polynomial::variable(ring, i);
      if (split_by(gens, x, quotient)) return;
    }
    std::vector<Polynomial> radical = radical_zero_dim(gb.elements);
    MaximalityCertificate cert = check_maximal(radical, seed_);
    if (!cert.maximal) {
      if (!split_by(gens, *cert.witness, quotient)) {
        raise(ErrorKind::NotPrimary, "could not split a non-primary ideal");
      }
      return;
    }
    PrimaryComponent c;
    c.generators = std::move(gens);
    c.component = gb.elements;
    c.radical = radical;
    c.triangular = triangular_generators(radical);
    c.multiplicity = quotient.dimension();
    c.certificate = std::move(cert);
    components_.push_back(std::move(c));
  }

  std::vector<PrimaryComponent> take() {
    std::stable_sort(components_.begin(), components_.end(),
                     [](const PrimaryComponent& a, const PrimaryComponent& b) {
                       return basis_text(a.component) < basis_text(b.component);
                     });
    return std::move(components_);
  }

 private:
  bool split_by(const std::vector<Polynomial>& gens, const Polynomial& element,
                const QuotientRing& quotient) {
    UPoly m = minimal_polynomial(element, quotient);
    if (m.degree() < 1) return false;
    auto factors = factor_univariate(m);
    if (factors.size() < 2) return false;
    for (const auto& f : factors) {
      std::vector<Polynomial> next = gens;
      next.push_back(power(f.factor, f.multiplicity).compose(element));
      split(std::move(next));
    }
    return true;
  }

  std::uint64_t seed_;
  std::vector<PrimaryComponent> components_;
};

}  // namespace

MaximalityCertificate check_maximal(std::span<const Polynomial> generators, std::uint64_t seed) {
  require_decomposable_field(generators);
  GroebnerBasis gb = buchberger(generators);
  const RingPtr& ring = gb.ring;
  if (gb.is_unit()) {
    return {false, 0, Polynomial::from_int(ring, 1), UPoly(ring->field())};
  }
  if (!gb.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  QuotientRing quotient(gb);
  bool done = false;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    auto cert = decide(Polynomial::variable(ring, i), quotient, done);
    if (done) return cert;
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = ring->nvars();
  for (int attempt = 0; attempt < 40; ++attempt) {
    long range = 2 + attempt % 20;
    std::uniform_int_distribution<long> dist(-range, range);
    Polynomial element(ring);
    if (attempt < 20) {
      for (std::size_t i = 0; i < n; ++i) {
        element += Polynomial::variable(ring, i) * ring->scalar(dist(rng));
      }
    } else {
      for (const auto& t : quotient.monomials()) {
        element += Polynomial::term(ring, t, ring->scalar(dist(rng)));
      }
    }
    if (element.is_constant()) continue;
    auto cert = decide(element, quotient, done);
    if (done) return cert;
  }
  raise(ErrorKind::PrimitiveElementNotFound, "no primitive element found");
}

std::vector<Polynomial> triangular_generators(std::span<const Polynomial> maximal) {
  if (maximal.empty()) raise(ErrorKind::InvalidArgument, "empty generator list");
  const RingPtr& ring = maximal.front().ring();
  RingPtr lex = ring->with_order(TermOrder::lex());
  GroebnerBasis gb = buchberger(in_ring(maximal, lex));
  std::size_t n = ring->nvars();
  std::vector<Polynomial> out(n, Polynomial(ring));
  std::vector<char> seen(n, 0);
  if (gb.elements.size() != n) {
    raise(ErrorKind::NotMaximal, "Lex basis does not have one element per variable");
  }
  for (const auto& g : gb.elements) {
    int v = g.leading_monomial().pure_power_variable();
    if (v < 0 || seen[static_cast<std::size_t>(v)]) {
      raise(ErrorKind::NotMaximal, "Lex basis is not triangular");
    }
    seen[static_cast<std::size_t>(v)] = 1;
    out[static_cast<std::size_t>(v)] = g.in_ring(ring);
  }
  return out;
}

std::vector<PrimaryComponent> primary_decomposition(std::span<const Polynomial> generators,
                                                    std::uint64_t seed) {
  require_decomposable_field(generators);
  GroebnerBasis gb = buchberger(generators);
  if (gb.is_unit()) return {};
  if (!gb.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  Decomposer d(seed);
  d.split(std::vector<Polynomial>(generators.begin(), generators.end()));
  return d.take();
}

}  // namespace zdci
