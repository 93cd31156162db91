#include "zdci/ci.hpp"

#include <utility>

#include "zdci/error.hpp"
#include "zdci/quotient.hpp"

namespace zdci {

namespace {

void require_nonempty(std::span<const Polynomial> fs, const char* what) {
  if (fs.empty()) raise(ErrorKind::InvalidArgument, std::string("empty ") + what);
}

std::vector<Polynomial> pick(std::span<const Polynomial> fs, const std::vector<std::size_t>& idx) {
  std::vector<Polynomial> out;
  for (std::size_t i : idx) out.push_back(fs[i]);
  return out;
}

}  // namespace

std::string_view to_string(FailureReason reason) noexcept {
  switch (reason) {
    case FailureReason::None: return "none";
    case FailureReason::CastelnuovoAsymmetric: return "CastelnuovoAsymmetric";
    case FailureReason::AllMinorsZero: return "AllMinorsZero";
  }
  return "unknown";
}

void finish_report(CIReport& report) {
  report.witnesses.clear();
  for (const auto& m : report.minors) {
    if (m.nonzero) report.witnesses.push_back(m.column_subset);
  }
  report.verdict = !report.witnesses.empty();
  report.failure_reason = report.verdict ? FailureReason::None : FailureReason::AllMinorsZero;
  report.full_generation.assign(report.witnesses.size(), std::nullopt);
}

bool radical_equals(std::span<const Polynomial> subset, std::span<const Polynomial> m) {
  require_nonempty(subset, "generator list");
  GroebnerBasis gb = buchberger(subset);
  if (gb.is_unit() || !gb.is_zero_dimensional()) return false;
  std::vector<Polynomial> radical = radical_zero_dim(gb.elements);
  return ideal_equal(radical, m);
}

CIReport check_ci_at_maximal(std::span<const Polynomial> q, std::span<const Polynomial> m,
                             const CIOptions& options) {
  require_nonempty(q, "ideal");
  require_nonempty(m, "maximal ideal");
  require_same_ring(q.front(), m.front());
  const bool parametric = q.front().ring()->field().is_parametric();
  GroebnerBasis modulus = buchberger(q);
  if (modulus.is_unit() || !modulus.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  if (!options.assume_primary) {
    if (parametric) {
      raise(ErrorKind::UnsupportedField, "primary check over rational function fields");
    }
    if (!check_maximal(m, options.seed).maximal) {
      raise(ErrorKind::NotPrimary, "the given ideal is not maximal");
    }
    if (!radical_equals(modulus.elements, m)) {
      raise(ErrorKind::NotPrimary, "the radical of the ideal differs from the maximal ideal");
    }
  }
  std::vector<Polynomial> g = triangular_generators(m);
  CIReport report;
  report.matrix = build_w_matrix(q, g);
  report.minors = fitting_minor_residues(*report.matrix, modulus,
                                         {options.short_circuit, options.threads});
  finish_report(report);
  if (!parametric) {
    for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
      report.full_generation[k] = radical_equals(pick(q, report.witnesses[k]), m);
    }
  }
  return report;
}

LocalCIResult check_locally_ci(std::span<const Polynomial> generators, const CIOptions& options) {
  auto components = primary_decomposition(generators, options.seed);
  if (components.empty()) raise(ErrorKind::NotZeroDimensional, "unit ideal");
  CIOptions local = options;
  local.assume_primary = true;
  LocalCIResult out;
  out.verdict = true;
  for (auto& c : components) {
    CIReport r = check_ci_at_maximal(c.component, c.radical, local);
    out.verdict = out.verdict && r.verdict;
    out.components.push_back({std::move(c), std::move(r)});
  }
  return out;
}

CIReport check_sci_macaulay(std::span<const Polynomial> generators, const CIOptions& options) {
  require_nonempty(generators, "ideal");
  RingPtr ring = generators.front().ring();
  if (!ring->order().is_degree_compatible()) ring = ring->with_order(TermOrder::degrevlex());
  std::vector<Polynomial> work = in_ring(generators, ring);
  DegreeFormIdeal dfi = degree_form_ideal(work);
  const auto& basis = dfi.macaulay_basis.elements;
  if (dfi.macaulay_basis.is_unit() || !dfi.macaulay_basis.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  CIReport report;
  report.hilbert = hilbert_data(dfi.macaulay_basis);
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  std::vector<std::vector<Polynomial>> columns;
  for (const auto& f : dfi.degree_forms) columns.push_back(split_by_variables(f));
  report.matrix = w_matrix_from_columns(vars, basis, columns);
  if (!report.hilbert->castelnuovo_symmetric()) {
    report.verdict = false;
    report.failure_reason = FailureReason::CastelnuovoAsymmetric;
    return report;
  }
  GroebnerBasis modulus = buchberger(dfi.degree_forms);
  report.minors = fitting_minor_residues(*report.matrix, modulus,
                                         {options.short_circuit, options.threads});
  finish_report(report);
  return report;
}

}  // namespace zdci
