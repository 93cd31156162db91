#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "zdci/border.hpp"
#include "zdci/ci.hpp"
#include "zdci/factor.hpp"
#include "zdci/format.hpp"
#include "zdci/groebner.hpp"
#include "zdci/minors.hpp"
#include "zdci/polynomial.hpp"
#include "zdci/quotient.hpp"
#include "zdci/univariate.hpp"

using namespace zdci;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

RingPtr plane(std::uint32_t p = 0) {
  auto field = p == 0 ? FieldDescriptor::rationals() : FieldDescriptor::prime_field(p);
  return Ring::make(field, {"x", "y"});
}

std::vector<Polynomial> plane_sci(const RingPtr& r) {
  return parse_all(r, {"x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1",
                       "x*y - y^5 + 2*y^4 - y^3 + 2*y^2",
                       "y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y"});
}

std::vector<Polynomial> cubic_points() {
  auto r = Ring::make(FieldDescriptor::rationals(), {"x", "y", "z"});
  std::vector<std::vector<Scalar>> points;
  for (long t : {-4, -3, -2, -1, 1, 2, 3, 4})
    points.push_back({r->scalar(t), r->scalar(t * t), r->scalar(t * t * t)});
  return vanishing_ideal_of_points(r, points);
}

}  // namespace

static void BM_BuchbergerPlane(benchmark::State& state) {
  auto r = plane(static_cast<std::uint32_t>(state.range(0)));
  auto gens = plane_sci(r);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerPlane)->Arg(0)->Arg(32003);

static void BM_BuchbergerCubicPoints(benchmark::State& state) {
  auto gens = cubic_points();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerCubicPoints);

static void BM_FittingMinors(benchmark::State& state) {
  auto gens = cubic_points();
  auto gb = buchberger(gens);
  auto df = degree_form_ideal(gens);
  std::vector<Polynomial> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.push_back(Polynomial::variable(gb.ring, i));
  std::vector<std::vector<Polynomial>> columns;
  for (const auto& d : df.degree_forms) columns.push_back(split_by_variables(d));
  auto w = w_matrix_from_columns(rows, df.degree_forms, columns);
  auto df_gb = buchberger(df.degree_forms);
  MinorOptions opts;
  opts.short_circuit = false;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fitting_minor_residues(w, df_gb, opts));
}
BENCHMARK(BM_FittingMinors)->Arg(1)->Arg(4);

static void BM_FactorSplitting(benchmark::State& state) {
  auto p = static_cast<std::uint32_t>(state.range(0));
  auto r = Ring::make(FieldDescriptor::prime_field(p), {"t"});
  auto f = UPoly::from_polynomial(
      parse_polynomial("t^" + std::to_string(p) + " - t", r), 0);
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(f));
}
BENCHMARK(BM_FactorSplitting)->Arg(31)->Arg(101);

static void BM_FactorRational(benchmark::State& state) {
  auto r = Ring::make(FieldDescriptor::rationals(), {"t"});
  auto f = UPoly::from_polynomial(
      parse_polynomial("(t^3 - t - 1)^2*(t^2 - 2)*(t^4 + 1)*(t - 3)", r), 0);
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(f));
}
BENCHMARK(BM_FactorRational);

static void BM_SciMacaulay(benchmark::State& state) {
  auto gens = plane_sci(plane());
  for (auto _ : state) benchmark::DoNotOptimize(check_sci_macaulay(gens));
}
BENCHMARK(BM_SciMacaulay);

static void BM_SciBorder(benchmark::State& state) {
  auto gens = plane_sci(plane());
  for (auto _ : state) benchmark::DoNotOptimize(check_sci_border(gens));
}
BENCHMARK(BM_SciBorder);

static void BM_FamilyLocus(benchmark::State& state) {
  auto k = Ring::make(FieldDescriptor::function_field(
                          {"c21", "c23", "c32", "c34", "c41", "c42", "c43", "c44"}),
                      {"x", "y"});
  auto gens = parse_all(k, {
      "y^2 - (-c23*c41*c42 + c21*c42*c43 - c21*c44 + c23) - c21*x"
      " - (-c21*c42 - c41*c44 + c43)*y - c41*x*y",
      "x^2 - (-c34*c41*c42 + c32*c41*c44 - c32*c43 + c34)"
      " - (-c32*c41 - c42*c43 + c44)*x - c32*y - c42*x*y",
      "x*y^2 - (c23*c32*c41 - c21*c32*c43 + c21*c34) - c23*x"
      " - (c21*c32 + c34*c41)*y - c43*x*y",
      "x^2*y - (c21*c34*c42 - c21*c32*c44 + c23*c32)"
      " - (c21*c32 + c23*c42)*x - c34*y - c44*x*y"});
  auto order = OrderIdeal::from_terms(k, {Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0},
                                          Monomial{1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(family_sci_locus(gens, {}, order));
}
BENCHMARK(BM_FamilyLocus);
BENCHMARK_MAIN();
