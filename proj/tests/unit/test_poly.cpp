#include <gtest/gtest.h>

#include "helpers.hpp"
#include "zdci/error.hpp"
#include "zdci/format.hpp"
#include "zdci/polynomial.hpp"

using namespace zdci;
using namespace zdci::testing;

TEST(Poly, DegreeFormOfPlaneGenerator) {
  auto r = ring_q({"x", "y"});
  auto f = poly(r, "x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1");
  EXPECT_EQ(to_string(degree_form(f)), "-2*y^5");
  EXPECT_EQ(to_string(degree_form(poly(r, "x*y - y^5 + 2*y^4"))), "-y^5");
  EXPECT_EQ(to_string(degree_form(poly(r, "x^2 - y^2 + x"))), "x^2 - y^2");
  EXPECT_THROW(degree_form(Polynomial(r)), Error);
}

TEST(Poly, DegreeFormIsMultiplicative) {
  auto r = ring_q({"x", "y", "z"});
  IdealFactory gen(r, 11);
  for (int k = 0; k < 200; ++k) {
    Polynomial f = gen.random_polynomial(4, 4, 5);
    Polynomial g = gen.random_polynomial(4, 4, 5);
    if (f.is_zero() || g.is_zero()) continue;
    ASSERT_EQ(degree_form(f * g), degree_form(f) * degree_form(g));
    ASSERT_TRUE(degree_form(f).is_homogeneous());
  }
}

TEST(Poly, Homogenize) {
  auto r = ring_q({"y", "z"});
  auto h = homogenize(poly(r, "y^2 - y - z"), "x0");
  EXPECT_EQ(h.ring()->variables(), (std::vector<std::string>{"x0", "y", "z"}));
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_EQ(h, poly(h.ring(), "y^2 - x0*y - x0*z"));
  EXPECT_EQ(dehomogenize(h), poly(r, "y^2 - y - z"));
}

TEST(Poly, HomogenizeRoundTrip) {
  auto r = ring_q({"x", "y"});
  IdealFactory gen(r, 12);
  for (int k = 0; k < 200; ++k) {
    Polynomial f = gen.random_polynomial(5, 5, 7);
    if (f.is_zero()) continue;
    Polynomial h = homogenize(f, "w");
    ASSERT_TRUE(h.is_homogeneous());
    ASSERT_EQ(dehomogenize(h), f);
  }
}

TEST(Poly, PartialDerivatives) {
  auto r = ring_q({"x", "y"});
  EXPECT_EQ(partial_derivative(poly(r, "x^2*y - y^3"), 1), poly(r, "x^2 - 3*y^2"));
  EXPECT_EQ(partial_derivative(poly(r, "x^2*y - y^3"), 0), poly(r, "2*x*y"));
  auto f5 = ring_fp(5, {"x"});
  EXPECT_TRUE(partial_derivative(poly(f5, "x^5"), 0).is_zero());
  EXPECT_EQ(partial_derivative(poly(f5, "x^6 + x"), 0), poly(f5, "x^5 + 1"));
}

TEST(Poly, SplitByVariables) {
  auto r = ring_q({"x", "y"});
  auto parts = split_by_variables(poly(r, "x^2*y - y^3"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], poly(r, "x*y"));
  EXPECT_EQ(parts[1], poly(r, "-y^2"));
}

TEST(Poly, SplitByVariablesParametric) {
  auto k = Ring::make(FieldDescriptor::function_field({"c41", "c42"}), {"x", "y"});
  auto parts = split_by_variables(poly(k, "y^2 - c41*x*y"));
  EXPECT_EQ(parts[0], poly(k, "-c41*y"));
  EXPECT_EQ(parts[1], poly(k, "y"));
  auto r = ring_q({"x", "y", "z"});
  auto unit = split_by_variables(poly(r, "y"));
  EXPECT_EQ(texts(unit), (std::vector<std::string>{"0", "1", "0"}));
}

TEST(Poly, SplitByVariablesErrors) {
  auto r = ring_q({"x", "y"});
  try {
    split_by_variables(poly(r, "x^2 + y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomogeneous);
  }
  try {
    split_by_variables(poly(r, "3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
  }
}

TEST(Poly, SplitByVariablesReassembles) {
  auto r = ring_q({"x", "y", "z"});
  IdealFactory gen(r, 13);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    Polynomial f = gen.random_polynomial(4, 5, 9);
    if (f.is_zero() || f.degree() == 0) continue;
    Polynomial h = degree_form(f);
    auto parts = split_by_variables(h);
    Polynomial sum(r);
    for (std::size_t i = 0; i < 3; ++i) {
      if (!parts[i].is_zero()) ASSERT_EQ(parts[i].degree() + 1, h.degree());
      sum += parts[i] * Polynomial::variable(r, i);
    }
    ASSERT_EQ(sum, h);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Poly, ArithmeticLaws) {
  auto r = ring_q({"x", "y", "z"});
  IdealFactory gen(r, 14);
  for (int k = 0; k < 200; ++k) {
    Polynomial a = gen.random_polynomial(3, 4, 5);
    Polynomial b = gen.random_polynomial(3, 4, 5);
    Polynomial c = gen.random_polynomial(3, 4, 5);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_TRUE((a * b).is_canonical());
  }
}

TEST(Poly, TermOrderings) {
  Monomial x2{2, 0, 0}, xy{1, 1, 0}, y3{0, 3, 0}, xz{1, 0, 1}, y2{0, 2, 0};
  auto lex = TermOrder::lex();
  auto dl = TermOrder::deglex();
  auto drl = TermOrder::degrevlex();
  EXPECT_GT(lex.compare(x2, y3), 0);
  EXPECT_LT(dl.compare(x2, y3), 0);
  EXPECT_GT(dl.compare(xz, y2), 0);
  EXPECT_LT(drl.compare(xz, y2), 0);
  EXPECT_GT(drl.compare(xy, xz), 0);
  EXPECT_EQ(drl.compare(xy, xy), 0);
  EXPECT_EQ(parse_term_order("lex"), lex);
  EXPECT_FALSE(parse_term_order("grevlex2").has_value());
}

TEST(Poly, OrderingsAreMultiplicativeTotalOrders) {
  auto r = ring_q({"x", "y", "z"});
  IdealFactory gen(r, 15);
  for (auto order : {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex()}) {
    for (int k = 0; k < 300; ++k) {
      Polynomial p = gen.random_polynomial(5, 3, 3);
      if (p.size() < 3) continue;
      const Monomial& a = p.terms()[0].mono;
      const Monomial& b = p.terms()[1].mono;
      const Monomial& c = p.terms()[2].mono;
      ASSERT_EQ(order.compare(a, b), -order.compare(b, a));
      if (order.compare(a, b) > 0) ASSERT_GT(order.compare(a * c, b * c), 0);
      if (order.compare(a, b) > 0 && order.compare(b, c) > 0) ASSERT_GT(order.compare(a, c), 0);
      ASSERT_GE(order.compare(a * c, a), 0);
    }
  }
}

TEST(Poly, ReorderingKeepsCanonicalForm) {
  auto r = ring_q({"x", "y", "z"});
  auto lex = r->with_order(TermOrder::lex());
  IdealFactory gen(r, 16);
  for (int k = 0; k < 100; ++k) {
    Polynomial f = gen.random_polynomial(4, 6, 5);
    Polynomial g = f.in_ring(lex);
    ASSERT_TRUE(g.is_canonical());
    ASSERT_EQ(g.in_ring(r), f);
  }
}

TEST(Poly, PrintParseRoundTrip) {
  auto r = ring_q({"x", "y", "z"});
  IdealFactory gen(r, 17);
  for (int k = 0; k < 200; ++k) {
    Polynomial f = gen.random_polynomial(4, 5, 9) * r->scalar(1);
    if (k % 3 == 0) f = f * Scalar::from_rational(r->field(), mpq_class(2, 7));
    ASSERT_EQ(parse_polynomial(to_string(f), r), f) << to_string(f);
  }
  auto k = Ring::make(FieldDescriptor::function_field({"c1", "c2"}), {"x", "y"});
  auto f = poly(k, "(1 - c1*c2)*x*y + c1/(c2 + 1)*x - 3");
  EXPECT_EQ(parse_polynomial(to_string(f), k), f);
}

TEST(Poly, ParseErrorsCarryPosition) {
  auto r = ring_q({"x", "y"});
  try {
    parse_polynomial("x + * y", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 1u);
    EXPECT_EQ(e.pos().column, 5u);
  }
  EXPECT_THROW(parse_polynomial("x + w", r), ParseError);
  EXPECT_THROW(parse_polynomial("x / y", r), Error);
  EXPECT_THROW(parse_polynomial("x / 0", r), Error);
}

TEST(Poly, RingMismatch) {
  auto a = ring_q({"x", "y"});
  auto b = ring_q({"x", "z"});
  try {
    (void)(poly(a, "x") + poly(b, "x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(Poly, ExponentOverflow) {
  auto r = ring_q({"x"});
  try {
    (void)poly(r, "x^40000").pow(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExponentOverflow);
  }
}

TEST(Poly, SubstituteAndEvaluate) {
  auto r = ring_q({"x", "y"});
  auto f = poly(r, "x^2*y - 3*x + 1");
  std::vector<Scalar> pt{r->scalar(2), r->scalar(-1)};
  EXPECT_EQ(f.evaluate(pt), r->scalar(-9));
  std::vector<Polynomial> images{poly(r, "x + y"), poly(r, "y")};
  EXPECT_EQ(f.substitute(images), poly(r, "(x + y)^2*y - 3*x - 3*y + 1"));
}
