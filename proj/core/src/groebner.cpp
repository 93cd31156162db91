#include "zdci/groebner.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>
#include <utility>

#include "zdci/error.hpp"

namespace zdci {

namespace {

using Terms = std::vector<Polynomial::Term>;

const RingPtr& common_ring(std::span<const Polynomial> fs) {
  if (fs.empty()) raise(ErrorKind::InvalidArgument, "empty generator list");
  for (const auto& f : fs) require_same_ring(fs.front(), f);
  return fs.front().ring();
}

int find_reducer(const Monomial& m, const std::vector<Polynomial>& basis,
                 const std::vector<char>* active) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active && !(*active)[k]) continue;
    if (basis[k].is_zero()) continue;
    if (basis[k].leading_monomial().divides(m)) return static_cast<int>(k);
  }
  return -1;
}

// Full reduction; quotient terms are appended per reducer when requested.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                       const std::vector<char>* active, std::vector<Terms>* quotients) {
  Terms rem;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    int k = find_reducer(lt.mono, basis, active);
    if (k < 0) {
      rem.push_back(lt);
      p.pop_leading();
      continue;
    }
    const Polynomial& g = basis[static_cast<std::size_t>(k)];
    Scalar c = lt.coeff / g.leading_coeff();
    Monomial m = lt.mono / g.leading_monomial();
    if (quotients) (*quotients)[static_cast<std::size_t>(k)].push_back({m, c});
    p.sub_mul(c, m, g);
  }
  return Polynomial::from_terms(p.ring(), std::move(rem));
}

std::vector<Polynomial> combine_lift(const std::vector<Polynomial>& start,
                                     const std::vector<Terms>& quotients,
                                     const std::vector<std::vector<Polynomial>>& lifts,
                                     const RingPtr& ring) {
  std::vector<Polynomial> out = start;
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    if (quotients[k].empty()) continue;
    Polynomial q = Polynomial::from_terms(ring, quotients[k]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= q * lifts[k][j];
  }
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t seq;
};

}  // namespace

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit()) return true;
  std::size_t n = ring->nvars();
  std::vector<char> seen(n, 0);
  for (const auto& g : elements) {
    int v = g.leading_monomial().pure_power_variable();
    if (v >= 0) seen[static_cast<std::size_t>(v)] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, bool track_lift) {
  const RingPtr& ring = common_ring(generators);
  const std::size_t r = generators.size();
  GroebnerBasis result;
  result.ring = ring;
  result.generators.assign(generators.begin(), generators.end());

  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> lifts;
  auto unit_vector = [&](std::size_t j, const Scalar& c) {
    std::vector<Polynomial> v(r, Polynomial(ring));
    v[j] = Polynomial::constant(ring, c);
    return v;
  };

  for (std::size_t j = 0; j < r; ++j) {
    const Polynomial& f = generators[j];
    if (f.is_zero()) continue;
    Scalar c = f.leading_coeff().inverse();
    basis.push_back(f * c);
    if (track_lift) lifts.push_back(unit_vector(j, c));
  }

  std::vector<Pair> pending;
  std::vector<std::vector<char>> is_pending;
  std::size_t seq = 0;
  auto add_pairs = [&](std::size_t t) {
    for (auto& row : is_pending) row.push_back(0);
    is_pending.emplace_back(t + 1, 0);
    for (std::size_t i = 0; i < t; ++i) {
      pending.push_back({i, t,
                         Monomial::lcm(basis[i].leading_monomial(), basis[t].leading_monomial()),
                         seq++});
      is_pending[i][t] = is_pending[t][i] = 1;
    }
  };
  for (std::size_t t = 0; t < basis.size(); ++t) add_pairs(t);

  auto finish_unit = [&](const Polynomial& h, const std::vector<Polynomial>* lift) {
    Scalar c = h.leading_coeff().inverse();
    result.elements = {Polynomial::from_int(ring, 1)};
    if (track_lift) {
      std::vector<Polynomial> l;
      for (const auto& p : *lift) l.push_back(p * c);
      result.lift = {std::move(l)};
    }
    return result;
  };
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (basis[t].is_constant()) return finish_unit(basis[t], track_lift ? &lifts[t] : nullptr);
  }

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return a.seq < b.seq;
    });
    Pair pr = *best;
    pending.erase(best);
    is_pending[pr.i][pr.j] = is_pending[pr.j][pr.i] = 0;

    const Polynomial& gi = basis[pr.i];
    const Polynomial& gj = basis[pr.j];
    if (gi.leading_monomial().coprime(gj.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      if (!is_pending[pr.i][k] && !is_pending[pr.j][k]) chain = true;
    }
    if (chain) continue;

    Monomial mi = pr.lcm / gi.leading_monomial();
    Monomial mj = pr.lcm / gj.leading_monomial();
    Polynomial s = gi.mul_term(mi, ring->one()) - gj.mul_term(mj, ring->one());
    std::vector<Terms> quotients(track_lift ? basis.size() : 0);
    Polynomial h = reduce_full(s, basis, nullptr, track_lift ? &quotients : nullptr);
    if (h.is_zero()) continue;

    std::vector<Polynomial> h_lift;
    if (track_lift) {
      std::vector<Polynomial> start(r, Polynomial(ring));
      for (std::size_t j = 0; j < r; ++j) {
        start[j] = lifts[pr.i][j].mul_term(mi, ring->one()) -
                   lifts[pr.j][j].mul_term(mj, ring->one());
      }
      h_lift = combine_lift(start, quotients, lifts, ring);
    }
    if (h.is_constant()) return finish_unit(h, &h_lift);
    Scalar c = h.leading_coeff().inverse();
    basis.push_back(h * c);
    if (track_lift) {
      for (auto& p : h_lift) p = p * c;
      lifts.push_back(std::move(h_lift));
    }
    add_pairs(basis.size() - 1);
  }

  std::vector<char> keep(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lti = basis[i].leading_monomial();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i) continue;
      const Monomial& ltk = basis[k].leading_monomial();
      if (ltk.divides(lti) && (!(ltk == lti) || k < i)) {
        keep[i] = 0;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    keep[i] = 0;
    Polynomial tail = basis[i];
    Polynomial::Term lt = tail.leading_term();
    tail.pop_leading();
    std::vector<Terms> quotients(track_lift ? basis.size() : 0);
    Polynomial reduced = reduce_full(tail, basis, &keep, track_lift ? &quotients : nullptr);
    keep[i] = 1;
    basis[i] = reduced + Polynomial::term(ring, lt.mono, lt.coeff);
    if (track_lift) lifts[i] = combine_lift(lifts[i], quotients, lifts, ring);
  }

  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    result.elements.push_back(std::move(basis[i]));
    if (track_lift) result.lift.push_back(std::move(lifts[i]));
  }
  return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!(*f.ring() == *basis.ring)) raise(ErrorKind::RingMismatch, "normal form across rings");
  return reduce_full(f, basis.elements, nullptr, nullptr);
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) {
  return normal_form(f, basis).is_zero();
}

bool ideal_contains(const GroebnerBasis& basis, std::span<const Polynomial> fs) {
  return std::all_of(fs.begin(), fs.end(),
                     [&](const Polynomial& f) { return ideal_contains(basis, f); });
}

DivisionResult divide_with_quotients(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (divisors.empty()) raise(ErrorKind::InvalidArgument, "no divisors given");
  for (const auto& d : divisors) require_same_ring(f, d);
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> ds(divisors.begin(), divisors.end());
  std::vector<Terms> quotients(ds.size());
  Polynomial remainder = reduce_full(f, ds, nullptr, &quotients);
  DivisionResult out{{}, std::move(remainder)};
  for (auto& q : quotients) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
  return out;
}

DegreeFormIdeal degree_form_ideal(std::span<const Polynomial> generators) {
  const RingPtr& ring = common_ring(generators);
  if (!ring->order().is_degree_compatible()) {
    raise(ErrorKind::InvalidArgument, "degree form ideal needs a degree-compatible ordering");
  }
  DegreeFormIdeal out;
  out.macaulay_basis = buchberger(generators);
  for (const auto& g : out.macaulay_basis.elements) out.degree_forms.push_back(degree_form(g));
  return out;
}

bool HilbertData::castelnuovo_symmetric() const {
  for (std::size_t i = 0; i < castelnuovo.size(); ++i) {
    if (castelnuovo[i] != castelnuovo[castelnuovo.size() - 1 - i]) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis) {
  constexpr std::size_t kLimit = 1u << 20;
  if (basis.elements.empty() || !basis.is_zero_dimensional()) {
    raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  }
  if (basis.is_unit()) return {};
  const RingPtr& ring = basis.ring;
  std::size_t n = ring->nvars();
  auto leading = basis.leading_monomials();
  auto in_lt = [&](const Monomial& m) {
    return std::any_of(leading.begin(), leading.end(),
                       [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue{Monomial(n)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    out.push_back(m);
    if (out.size() > kLimit) raise(ErrorKind::InvalidArgument, "quotient dimension too large");
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(n, i);
      if (seen.count(next) || in_lt(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  const Ring& r = *ring;
  std::sort(out.begin(), out.end(), [&r](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return r.compare(a, b) < 0;
  });
  return out;
}

HilbertData hilbert_data(const GroebnerBasis& basis) {
  if (!basis.ring->order().is_degree_compatible()) return hilbert_data(basis.elements);
  auto standard = standard_monomials(basis);
  if (standard.empty()) raise(ErrorKind::NotZeroDimensional, "the unit ideal has no points");
  HilbertData h;
  h.mu = standard.size();
  h.ri = standard.back().degree();
  h.castelnuovo.assign(h.ri + 1, 0);
  for (const auto& m : standard) ++h.castelnuovo[m.degree()];
  std::size_t acc = 0;
  for (std::size_t c : h.castelnuovo) h.hf.push_back(acc += c);
  h.last_difference = h.castelnuovo.back();
  return h;
}

HilbertData hilbert_data(std::span<const Polynomial> generators) {
  const RingPtr& ring = common_ring(generators);
  if (ring->order().is_degree_compatible()) return hilbert_data(buchberger(generators));
  RingPtr graded = ring->with_order(TermOrder::degrevlex());
  auto moved = in_ring(generators, graded);
  return hilbert_data(buchberger(moved));
}

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  const RingPtr& ring = common_ring(a);
  if (!(*ring == *common_ring(b))) raise(ErrorKind::RingMismatch, "ideals in different rings");
  GroebnerBasis ga = buchberger(a);
  GroebnerBasis gb = buchberger(b);
  if (ga.elements.size() != gb.elements.size()) return false;
  for (const auto& g : ga.elements) {
    bool found = std::any_of(gb.elements.begin(), gb.elements.end(),
                             [&](const Polynomial& h) { return g == h; });
    if (!found) return false;
  }
  return true;
}

std::vector<Polynomial> ideal_intersect(std::span<const Polynomial> a,
                                        std::span<const Polynomial> b) {
  const RingPtr& ring = common_ring(a);
  if (!(*ring == *common_ring(b))) raise(ErrorKind::RingMismatch, "ideals in different rings");
  std::size_t n = ring->nvars();
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  TermOrder base = ring->order();
  RingPtr tagged =
      Ring::make(ring->field(), names, TermOrder::elimination(1 + base.block, base.kind));
  std::vector<int> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i + 1);
  Polynomial t = Polynomial::variable(tagged, 0);
  Polynomial one_minus_t = Polynomial::from_int(tagged, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * map_variables(f, tagged, up));
  for (const auto& g : b) gens.push_back(one_minus_t * map_variables(g, tagged, up));
  GroebnerBasis gb = buchberger(gens);
  std::vector<int> down(n + 1);
  down[0] = -1;
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = static_cast<int>(i);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    if (g.leading_monomial()[0] != 0) continue;
    out.push_back(map_variables(g, ring, down));
  }
  if (out.empty()) return {Polynomial(ring)};
  return buchberger(out).elements;
}

std::vector<Polynomial> in_ring(std::span<const Polynomial> fs, const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.in_ring(target));
  return out;
}

}  // namespace zdci
