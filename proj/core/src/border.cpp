#include "zdci/border.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "zdci/error.hpp"
#include "zdci/groebner.hpp"
#include "zdci/matrix.hpp"
#include "zdci/quotient.hpp"

namespace zdci {

namespace {

RingPtr working_ring(const RingPtr& ring) {
  return ring->order().is_degree_compatible() ? ring : ring->with_order(TermOrder::degrevlex());
}

void sort_by_degree(const RingPtr& ring, std::vector<Monomial>& ts) {
  std::sort(ts.begin(), ts.end(), [&ring](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ring->compare(a, b) < 0;
  });
}

// Coordinates of residues in the basis O of P/J.
class OrderIdealCoordinates {
 public:
  OrderIdealCoordinates(GroebnerBasis gb, const OrderIdeal& order)
      : quotient_(std::move(gb)), order_(order),
        echelon_(quotient_.ring()->field(), quotient_.dimension()) {
    if (quotient_.dimension() != order.size()) {
      raise(ErrorKind::InvalidArgument, "order ideal size differs from the quotient dimension");
    }
    const RingPtr& ring = quotient_.ring();
    for (const auto& t : order.terms) {
      auto v = quotient_.residue_vector(Polynomial::term(ring, t, ring->one()));
      if (echelon_.insert(v)) {
        raise(ErrorKind::InvalidArgument, "order ideal is not a basis of the quotient");
      }
    }
  }

  Polynomial reduce(const Polynomial& f) const {
    const RingPtr& ring = quotient_.ring();
    auto v = quotient_.residue_vector(f.in_ring(ring));
    auto c = echelon_.express(v);
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < order_.size(); ++k) {
      if (!(*c)[k].is_zero()) terms.push_back({order_.terms[k], (*c)[k]});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

 private:
  QuotientRing quotient_;
  const OrderIdeal& order_;
  EchelonBasis echelon_;
};

GroebnerBasis zero_dimensional_basis(std::span<const Polynomial> generators, const RingPtr& ring) {
  GroebnerBasis gb = buchberger(in_ring(generators, ring));
  if (gb.is_unit() || !gb.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  return gb;
}

Polynomial term_poly(const RingPtr& ring, const Monomial& t) {
  return Polynomial::term(ring, t, ring->one());
}

ParamPoly primitive_numerator(const Scalar& s, std::size_t nparams) {
  if (!s.is_fraction()) return ParamPoly::constant(nparams, 1);
  ParamPoly num = s.normalized().fraction().num;
  if (num.is_constant()) return ParamPoly::constant(nparams, 1);
  num = ParamPoly::divexact(num, num.content());
  if (num.leading_coeff() < 0) num = -num;
  return num;
}

}  // namespace

OrderIdeal OrderIdeal::from_terms(const RingPtr& ring, std::vector<Monomial> terms) {
  OrderIdeal o;
  o.ring = ring;
  sort_by_degree(ring, terms);
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  o.terms = std::move(terms);
  if (o.terms.empty() || !o.terms.front().is_one()) {
    raise(ErrorKind::InvalidArgument, "order ideal must contain 1");
  }
  const std::size_t n = ring->nvars();
  for (const auto& t : o.terms) {
    if (t.size() != n) raise(ErrorKind::InvalidArgument, "term has the wrong number of variables");
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      Monomial d = t;
      d.set(i, t[i] - 1);
      if (!o.contains(d)) raise(ErrorKind::InvalidArgument, "order ideal is not closed under division");
    }
  }
  std::vector<Monomial> border;
  for (const auto& t : o.terms) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial b = t * Monomial::variable(n, i);
      if (!o.contains(b) && std::find(border.begin(), border.end(), b) == border.end()) {
        border.push_back(b);
      }
    }
  }
  sort_by_degree(ring, border);
  o.border = std::move(border);
  return o;
}

bool OrderIdeal::contains(const Monomial& t) const {
  return std::find(terms.begin(), terms.end(), t) != terms.end();
}

std::vector<std::size_t> OrderIdeal::degree_counts() const {
  std::vector<std::size_t> h;
  for (const auto& t : terms) {
    if (h.size() <= t.degree()) h.resize(t.degree() + 1, 0);
    ++h[t.degree()];
  }
  return h;
}

BorderBasis border_basis(std::span<const Polynomial> generators) {
  if (generators.empty()) raise(ErrorKind::InvalidArgument, "empty ideal");
  RingPtr ring = working_ring(generators.front().ring());
  GroebnerBasis gb = zero_dimensional_basis(generators, ring);
  BorderBasis out;
  out.order = OrderIdeal::from_terms(ring, standard_monomials(gb));
  for (const auto& b : out.order.border) {
    Polynomial bp = term_poly(ring, b);
    out.polynomials.push_back(bp - normal_form(bp, gb));
  }
  out.degree_filtered = check_degree_filtered(out).holds;
  return out;
}

BorderBasis border_basis(std::span<const Polynomial> generators, const OrderIdeal& order) {
  if (generators.empty()) raise(ErrorKind::InvalidArgument, "empty ideal");
  RingPtr ring = working_ring(generators.front().ring());
  GroebnerBasis gb = zero_dimensional_basis(generators, ring);
  BorderBasis out;
  out.order = OrderIdeal::from_terms(ring, order.terms);
  OrderIdealCoordinates coords(std::move(gb), out.order);
  for (const auto& b : out.order.border) {
    Polynomial bp = term_poly(ring, b);
    out.polynomials.push_back(bp - coords.reduce(bp));
  }
  out.degree_filtered = check_degree_filtered(out).holds;
  return out;
}

DegreeFilterCheck check_degree_filtered(const BorderBasis& basis) {
  DegreeFilterCheck out;
  const OrderIdeal& o = basis.order;
  const RingPtr& ring = o.ring;
  if (basis.polynomials.size() != o.border.size()) {
    raise(ErrorKind::InvalidArgument, "one polynomial per border term expected");
  }
  out.prebasis = true;
  for (std::size_t j = 0; j < o.border.size(); ++j) {
    const Polynomial& g = basis.polynomials[j];
    bool has_border_term = false;
    for (const auto& t : g.terms()) {
      if (t.mono == o.border[j] && t.coeff.is_one()) {
        has_border_term = true;
      } else if (!o.contains(t.mono)) {
        out.prebasis = false;
      }
    }
    if (!has_border_term) out.prebasis = false;
  }
  std::vector<Polynomial> work = in_ring(basis.polynomials, working_ring(ring));
  GroebnerBasis gb = buchberger(work);
  if (!gb.is_unit() && gb.is_zero_dimensional()) {
    try {
      OrderIdealCoordinates coords(gb, OrderIdeal::from_terms(gb.ring, o.terms));
      out.border_basis = out.prebasis;
    } catch (const Error&) {
      out.border_basis = false;
    }
    out.hilbert_condition = hilbert_data(gb).castelnuovo == o.degree_counts();
  }
  out.border_term_condition = true;
  for (std::size_t j = 0; j < o.border.size(); ++j) {
    const Polynomial& g = basis.polynomials[j];
    Polynomial df = g.is_zero() ? g : degree_form(g);
    out.degree_forms.push_back(df);
    bool found = std::any_of(df.terms().begin(), df.terms().end(),
                             [&](const Polynomial::Term& t) { return t.mono == o.border[j]; });
    if (!found) {
      out.border_term_condition = false;
      out.failing_border_terms.push_back(j);
    }
  }
  out.holds = out.border_basis && out.hilbert_condition && out.border_term_condition;
  return out;
}

CIReport check_sci_border(std::span<const Polynomial> generators, const CIOptions& options,
                          const std::optional<OrderIdeal>& order) {
  BorderBasis basis = order ? border_basis(generators, *order) : border_basis(generators);
  DegreeFilterCheck diag = check_degree_filtered(basis);
  if (!diag.holds) raise(ErrorKind::InvalidArgument, "border basis is not degree filtered");
  const OrderIdeal& o = basis.order;
  const RingPtr& ring = o.ring;
  CIReport report;
  report.hilbert = hilbert_data(buchberger(basis.polynomials));
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  std::vector<std::vector<Polynomial>> columns;
  for (const auto& f : diag.degree_forms) columns.push_back(split_by_variables(f));
  report.matrix = w_matrix_from_columns(vars, basis.polynomials, columns);
  std::vector<std::size_t> h = o.degree_counts();
  for (std::size_t i = 0; i < h.size() / 2 + 1; ++i) {
    if (h[i] != h[h.size() - 1 - i]) {
      report.verdict = false;
      report.failure_reason = FailureReason::CastelnuovoAsymmetric;
      return report;
    }
  }
  OrderIdealCoordinates coords(buchberger(diag.degree_forms), o);
  report.minors = fitting_minor_residues(
      *report.matrix, [&coords](const Polynomial& f) { return coords.reduce(f); },
      {options.short_circuit, options.threads});
  finish_report(report);
  return report;
}

FamilyLocus family_sci_locus(std::span<const Polynomial> generators, const CIOptions& options,
                             const std::optional<OrderIdeal>& order) {
  if (generators.empty()) raise(ErrorKind::InvalidArgument, "empty ideal");
  const FieldDescriptor& field = generators.front().ring()->field();
  if (!field.is_parametric()) {
    raise(ErrorKind::UnsupportedField, "family mode needs a rational function field");
  }
  CIOptions all = options;
  all.short_circuit = false;
  FamilyLocus out;
  out.report = check_sci_border(generators, all, order);
  const std::size_t m = field.parameters.size();
  for (const auto& minor : out.report.minors) {
    if (!minor.nonzero) continue;
    MinorLocus locus{minor.column_subset, minor.residue, {}, {}};
    std::vector<std::string> texts;
    for (const auto& t : minor.residue.terms()) {
      ParamPoly p = primitive_numerator(t.coeff, m);
      std::string s = p.to_string(field.parameters);
      if (std::find(texts.begin(), texts.end(), s) != texts.end()) continue;
      texts.push_back(s);
      locus.conditions.push_back(std::move(p));
    }
    std::vector<std::size_t> idx(texts.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return texts[a] < texts[b]; });
    std::vector<ParamPoly> sorted;
    for (std::size_t k : idx) {
      if (!locus.text.empty()) locus.text += " or ";
      locus.text += texts[k] + " != 0";
      sorted.push_back(locus.conditions[k]);
    }
    locus.conditions = std::move(sorted);
    out.conditions.push_back(locus.text);
    out.minors.push_back(std::move(locus));
  }
  std::sort(out.conditions.begin(), out.conditions.end());
  out.conditions.erase(std::unique(out.conditions.begin(), out.conditions.end()),
                       out.conditions.end());
  return out;
}

}  // namespace zdci
