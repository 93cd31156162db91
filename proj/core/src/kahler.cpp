#include "zdci/kahler.hpp"

#include <string>
#include <utility>

#include "zdci/error.hpp"
#include "zdci/groebner.hpp"
#include "zdci/quotient.hpp"

namespace zdci {

namespace {

void require_prime_field(std::span<const Polynomial> generators) {
  if (generators.empty()) raise(ErrorKind::InvalidArgument, "empty ideal");
  if (generators.front().ring()->field().is_parametric()) {
    raise(ErrorKind::UnsupportedField, "Kaehler differents over rational function fields");
  }
}

bool divides_char(std::uint32_t p, std::size_t value) {
  return p != 0 && value % p == 0;
}

// Transposed Jacobian as an n x r matrix, so its order-n minors are the
// maximal minors of the Jacobian.
SyzygyMatrix jacobian_matrix(const std::vector<Polynomial>& fs,
                             std::vector<std::vector<Polynomial>>& jacobian) {
  const RingPtr& ring = fs.front().ring();
  std::vector<Polynomial> vars;
  for (std::size_t j = 0; j < ring->nvars(); ++j) vars.push_back(Polynomial::variable(ring, j));
  jacobian.clear();
  for (const auto& f : fs) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < ring->nvars(); ++j) row.push_back(partial_derivative(f, j));
    jacobian.push_back(std::move(row));
  }
  return w_matrix_from_columns(vars, fs, jacobian);
}

std::vector<MinorReport> nonzero_only(std::vector<MinorReport> minors) {
  std::vector<MinorReport> out;
  for (auto& m : minors) {
    if (m.nonzero) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

KahlerReport kahler_different(std::span<const Polynomial> generators, KahlerTarget target,
                              const MinorOptions& options) {
  require_prime_field(generators);
  RingPtr ring = generators.front().ring();
  KahlerReport out;
  GroebnerBasis modulus(buchberger(generators));
  if (target == KahlerTarget::Self) {
    if (modulus.is_unit() || !modulus.is_zero_dimensional()) {
      raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
    }
    out.generators.assign(generators.begin(), generators.end());
  } else {
    if (!ring->order().is_degree_compatible()) ring = ring->with_order(TermOrder::degrevlex());
    DegreeFormIdeal dfi = degree_form_ideal(in_ring(generators, ring));
    if (dfi.macaulay_basis.is_unit() || !dfi.macaulay_basis.is_zero_dimensional()) {
      raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
    }
    out.generators = dfi.degree_forms;
    modulus = buchberger(dfi.degree_forms);
  }
  out.mu = standard_monomials(modulus).size();
  SyzygyMatrix jt = jacobian_matrix(out.generators, out.jacobian);
  MinorOptions all = options;
  all.short_circuit = false;
  out.theta_generators = nonzero_only(fitting_minor_residues(jt, modulus, all));
  out.char_ok = !divides_char(ring->field().characteristic(), out.mu);
  if (out.char_ok) out.verdict_if_applicable = !out.theta_generators.empty();
  return out;
}

KahlerLocalReport kahler_local_ci_check(std::span<const Polynomial> generators,
                                        const CIOptions& options) {
  require_prime_field(generators);
  const std::uint32_t p = generators.front().ring()->field().characteristic();
  GroebnerBasis gb = buchberger(generators);
  if (gb.is_unit() || !gb.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  std::size_t mu = standard_monomials(gb).size();
  if (divides_char(p, mu)) {
    raise(ErrorKind::CharacteristicObstruction,
          "characteristic " + std::to_string(p) + " divides mu = " + std::to_string(mu));
  }
  auto components = primary_decomposition(generators, options.seed);
  for (const auto& c : components) {
    if (divides_char(p, c.multiplicity)) {
      raise(ErrorKind::CharacteristicObstruction,
            "characteristic " + std::to_string(p) + " divides a local multiplicity " +
                std::to_string(c.multiplicity));
    }
  }
  std::vector<Polynomial> fs(generators.begin(), generators.end());
  std::vector<std::vector<Polynomial>> jacobian;
  SyzygyMatrix jt = jacobian_matrix(fs, jacobian);
  KahlerLocalReport out;
  out.verdict = true;
  for (auto& c : components) {
    GroebnerBasis local = buchberger(c.component);
    auto theta = nonzero_only(fitting_minor_residues(jt, local, {false, options.threads}));
    bool nonzero = !theta.empty();
    out.verdict = out.verdict && nonzero;
    out.components.push_back({std::move(c), std::move(theta), nonzero});
  }
  return out;
}

}  // namespace zdci
