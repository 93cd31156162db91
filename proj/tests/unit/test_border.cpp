#include <gtest/gtest.h>

#include "helpers.hpp"
#include "zdci/border.hpp"
#include "zdci/error.hpp"
#include "zdci/format.hpp"
#include "zdci/quotient.hpp"

using namespace zdci;
using namespace zdci::testing;

namespace {

const std::vector<std::string> kParams{"c21", "c23", "c32", "c34", "c41", "c42", "c43", "c44"};

RingPtr family_ring() {
  return Ring::make(FieldDescriptor::function_field(kParams), {"x", "y"});
}

std::vector<Polynomial> family(const RingPtr& k) {
  return polys(k, {
      "y^2 - (-c23*c41*c42 + c21*c42*c43 - c21*c44 + c23) - c21*x"
      " - (-c21*c42 - c41*c44 + c43)*y - c41*x*y",
      "x^2 - (-c34*c41*c42 + c32*c41*c44 - c32*c43 + c34)"
      " - (-c32*c41 - c42*c43 + c44)*x - c32*y - c42*x*y",
      "x*y^2 - (c23*c32*c41 - c21*c32*c43 + c21*c34) - c23*x"
      " - (c21*c32 + c34*c41)*y - c43*x*y",
      "x^2*y - (c21*c34*c42 - c21*c32*c44 + c23*c32)"
      " - (c21*c32 + c23*c42)*x - c34*y - c44*x*y"});
}

OrderIdeal square_order(const RingPtr& r) {
  return OrderIdeal::from_terms(r, {Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}, Monomial{1, 1}});
}

std::vector<Polynomial> plane_sci(const RingPtr& r) {
  return polys(r, {"x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1",
                   "x*y - y^5 + 2*y^4 - y^3 + 2*y^2",
                   "y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y"});
}

bool in_support(const Polynomial& f, const Monomial& t) {
  return std::any_of(f.terms().begin(), f.terms().end(),
                     [&](const Polynomial::Term& term) { return term.mono == t; });
}

}  // namespace

TEST(Border, OrderIdealValidation) {
  auto r = ring_q({"x", "y"});
  auto o = square_order(r);
  EXPECT_EQ(o.size(), 4u);
  EXPECT_EQ(o.border.size(), 4u);
  EXPECT_EQ(o.degree_counts(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(o.contains(Monomial{1, 1}));
  EXPECT_FALSE(o.contains(Monomial{2, 0}));
  EXPECT_THROW(OrderIdeal::from_terms(r, {Monomial{0, 0}, Monomial{1, 1}}), Error);
  EXPECT_THROW(OrderIdeal::from_terms(r, {Monomial{1, 0}}), Error);
}

TEST(Border, SquareMonomialIdeal) {
  auto r = ring_q({"x", "y"});
  auto bb = border_basis(polys(r, {"x^2", "y^2"}));
  EXPECT_EQ(bb.order.terms, square_order(r).terms);
  auto sorted = texts(bb.polynomials);
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::string>{"x*y^2", "x^2", "x^2*y", "y^2"}));
  EXPECT_TRUE(bb.degree_filtered);
  auto report = check_sci_border(polys(r, {"x^2", "y^2"}));
  EXPECT_TRUE(report.verdict);
}

TEST(Border, StrictPlaneExample) {
  auto r = ring_q({"x", "y"});
  auto bb = border_basis(plane_sci(r));
  EXPECT_EQ(bb.polynomials.size(), 6u);
  auto check = check_degree_filtered(bb);
  EXPECT_TRUE(check.holds);
  // Castelnuovo function against degree counts of O.
  auto h = hilbert_data(plane_sci(r));
  EXPECT_EQ(h.castelnuovo, bb.order.degree_counts());
  EXPECT_TRUE(check.hilbert_condition);
  for (std::size_t j = 0; j < bb.polynomials.size(); ++j)
    EXPECT_TRUE(in_support(degree_form(bb.polynomials[j]), bb.order.border[j]));
  EXPECT_TRUE(check.border_term_condition);
  auto report = check_sci_border(plane_sci(r));
  EXPECT_TRUE(report.verdict);
  ASSERT_EQ(report.witnesses.size(), 1u);
  EXPECT_EQ(to_string(report.minors[0].residue), "y^4");
}

TEST(Border, NotDegreeFiltered) {
  auto r = ring_q({"x", "y"});
  auto o = OrderIdeal::from_terms(r, {Monomial{0, 0}, Monomial{0, 1}, Monomial{0, 2}});
  auto gens = polys(r, {"x - y^2", "y^3"});
  auto bb = border_basis(gens, o);
  auto expected = polys(r, {"x - y^2", "x*y", "y^3", "x*y^2"});
  EXPECT_TRUE(ideal_equal(bb.polynomials, expected));
  auto check = check_degree_filtered(bb);
  EXPECT_TRUE(check.prebasis);
  EXPECT_TRUE(check.border_basis);
  EXPECT_FALSE(check.hilbert_condition);
  EXPECT_FALSE(check.border_term_condition);
  EXPECT_FALSE(check.holds);
  ASSERT_FALSE(check.failing_border_terms.empty());
  EXPECT_EQ(bb.order.border[check.failing_border_terms[0]], (Monomial{1, 0}));
  try {
    check_sci_border(gens, {}, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Border, DeclaredOrderMustBeBasis) {
  auto r = ring_q({"x", "y"});
  auto o = OrderIdeal::from_terms(r, {Monomial{0, 0}, Monomial{0, 1}});
  EXPECT_THROW(border_basis(polys(r, {"x^2", "y^2"}), o), Error);
}

TEST(Border, FamilyLocus) {
  auto k = family_ring();
  auto locus = family_sci_locus(family(k), {}, square_order(k));
  EXPECT_TRUE(locus.generic_only);
  EXPECT_TRUE(locus.report.verdict);
  std::size_t nonzero = 0;
  for (const auto& m : locus.minors)
    if (!m.conditions.empty()) ++nonzero;
  EXPECT_EQ(nonzero, 1u);
  EXPECT_EQ(locus.conditions, (std::vector<std::string>{"c41*c42 - 1 != 0"}));
  ASSERT_FALSE(locus.report.witnesses.empty());
  EXPECT_EQ(to_string(locus.report.minors[0].residue), "(c41*c42 - 1)*x*y");
}

TEST(Border, FamilySpecializationsAgree) {
  auto k = family_ring();
  auto gens = family(k);
  auto locus = family_sci_locus(gens, {}, square_order(k));
  auto q = ring_q({"x", "y"});
  IdealFactory gen(q, 81);
  std::vector<std::vector<mpq_class>> points;
  points.push_back(std::vector<mpq_class>(8, 0));
  for (int s = 0; s < 24; ++s) {
    std::vector<mpq_class> v(8);
    for (auto& c : v) c = gen.uniform(-4, 4);
    if (s % 4 == 0) {
      // Points on the hypersurface c41*c42 = 1.
      long a = gen.uniform(1, 3) * (gen.uniform(0, 1) ? 1 : -1);
      v[4] = a;
      v[5] = mpq_class(1) / a;
    }
    points.push_back(v);
  }
  for (const auto& v : points) {
    std::vector<Polynomial> fiber;
    for (const auto& f : gens) fiber.push_back(*specialize(f, q, v));
    bool predicted = false;
    for (const auto& m : locus.minors)
      for (const auto& c : m.conditions) predicted = predicted || c.evaluate(v) != 0;
    auto macaulay = check_sci_macaulay(fiber);
    ASSERT_EQ(macaulay.verdict, predicted);
    ASSERT_EQ(check_sci_border(fiber).verdict, predicted);
  }
}

TEST(Border, ConstantFamily) {
  auto k = Ring::make(FieldDescriptor::function_field({"c"}), {"x", "y"});
  auto locus = family_sci_locus(polys(k, {"x^2", "y^2"}));
  EXPECT_EQ(locus.conditions, (std::vector<std::string>{"1 != 0"}));
  EXPECT_TRUE(locus.report.verdict);
}

TEST(Border, FamilyNeedsParameters) {
  auto r = ring_q({"x", "y"});
  try {
    family_sci_locus(polys(r, {"x^2", "y^2"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField);
  }
}

TEST(Border, MethodsAgree) {
  for (std::uint32_t p : {0u, 32003u}) {
    auto r = p == 0 ? ring_q({"x", "y", "z"}) : ring_fp(p, {"x", "y", "z"});
    IdealFactory gen(r, 91 + p);
    for (int k = 0; k < 30; ++k) {
      auto ideal = gen.any();
      auto bb = border_basis(ideal.generators);
      ASSERT_TRUE(check_degree_filtered(bb).holds);
      QuotientRing quotient(buchberger(ideal.generators));
      ASSERT_EQ(bb.order.size(), quotient.dimension());
      ASSERT_TRUE(ideal_equal(bb.polynomials, ideal.generators));
      ASSERT_EQ(check_sci_border(ideal.generators).verdict,
                check_sci_macaulay(ideal.generators).verdict)
          << ideal.kind;
    }
  }
}
