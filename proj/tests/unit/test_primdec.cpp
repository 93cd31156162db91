#include <gtest/gtest.h>

#include "helpers.hpp"
#include "zdci/error.hpp"
#include "zdci/factor.hpp"
#include "zdci/format.hpp"
#include "zdci/primdec.hpp"
#include "zdci/quotient.hpp"

using namespace zdci;
using namespace zdci::testing;

namespace {

UPoly up(const RingPtr& r, const std::string& text) {
  return UPoly::from_polynomial(poly(r, text), 0);
}

std::string factor_text(const std::vector<Factor>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += " ";
    out += "(" + f.factor.to_string("t") + ")^" + std::to_string(f.multiplicity);
  }
  return out;
}

UPoly product(const std::vector<Factor>& fs, const FieldDescriptor& field) {
  UPoly p = UPoly::constant(field, Scalar::one(field));
  for (const auto& f : fs)
    for (unsigned k = 0; k < f.multiplicity; ++k) p = p * f.factor;
  return p;
}

}  // namespace

TEST(Factor, RationalExamples) {
  auto r = ring_q({"t"});
  EXPECT_TRUE(is_irreducible(up(r, "t^3 - t - 1")));
  EXPECT_EQ(factor_text(factor_univariate(up(r, "t^2 - t"))), "(t - 1)^1 (t)^1");
  EXPECT_EQ(factor_text(factor_univariate(up(r, "t^4 - 4*t^2"))), "(t - 2)^1 (t)^2 (t + 2)^1");
  auto f = factor_univariate(up(r, "(t^4 + 1)*(t^4 - 2*t^2 + 9)*(3*t^2 - 5)"));
  EXPECT_EQ(f.size(), 3u);
  for (const auto& x : f) EXPECT_TRUE(is_irreducible(x.factor));
}

TEST(Factor, PrimeFieldSplitsCompletely) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    auto r = ring_fp(p, {"t"});
    UPoly q = up(r, "t^" + std::to_string(p) + " - t");
    auto fs = factor_univariate(q);
    ASSERT_EQ(fs.size(), p);
    for (const auto& f : fs) {
      ASSERT_EQ(f.factor.degree(), 1);
      ASSERT_EQ(f.multiplicity, 1u);
    }
    for (std::uint32_t a = 0; a < p; ++a)
      ASSERT_TRUE(q.evaluate(Scalar::from_int(r->field(), a)).is_zero());
  }
}

TEST(Factor, ProductReconstructs) {
  for (std::uint32_t p : {0u, 3u, 32003u}) {
    auto r = p == 0 ? ring_q({"t"}) : ring_fp(p, {"t"});
    IdealFactory gen(r, 41 + p);
    for (int k = 0; k < 40; ++k) {
      UPoly q = UPoly::constant(r->field(), r->one());
      int parts = static_cast<int>(gen.uniform(1, 3));
      for (int j = 0; j < parts; ++j) {
        Polynomial f = gen.random_polynomial(4, 3, 5) + poly(r, "t");
        if (f.is_constant()) continue;
        UPoly u = UPoly::from_polynomial(f, 0);
        q = q * u;
        if (gen.uniform(0, 2) == 0) q = q * u;
      }
      if (q.degree() < 1) continue;
      auto fs = factor_univariate(q);
      ASSERT_EQ(product(fs, r->field()), q.monic());
      for (const auto& f : fs) ASSERT_TRUE(is_irreducible(f.factor));
    }
  }
}

TEST(Factor, DegreeCap) {
  auto r = ring_q({"t"});
  try {
    factor_univariate(up(r, "t^30 + t + 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeCapExceeded);
  }
}

TEST(Primdec, SinglePrimaryComponent) {
  auto r = ring_q({"x", "y", "z"});
  auto i = polys(r, {"z^2 - y", "x^2 - 2*x*z + y", "y*z - z - 1", "y^2 - y - z"});
  auto comps = primary_decomposition(i);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_TRUE(ideal_equal(comps[0].radical, polys(r, {"x - z", "y - z^2", "z^3 - z - 1"})));
  EXPECT_EQ(comps[0].multiplicity, 6u);
  EXPECT_EQ(texts(comps[0].triangular),
            (std::vector<std::string>{"x - z", "-z^2 + y", "z^3 - z - 1"}));
}

TEST(Primdec, CollapsesToMaximal) {
  auto r = ring_q({"x"});
  auto comps = primary_decomposition(polys(r, {"x*(x - 1)", "x*(x - 2)"}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(texts(comps[0].component), (std::vector<std::string>{"x"}));
}

TEST(Primdec, TwoRationalPoints) {
  auto r = ring_q({"x", "y"});
  auto i = polys(r, {"x^2 - x", "y"});
  auto comps = primary_decomposition(i);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_TRUE(ideal_equal(comps[0].component, polys(r, {"x - 1", "y"})));
  EXPECT_TRUE(ideal_equal(comps[1].component, polys(r, {"x", "y"})));
  EXPECT_TRUE(ideal_equal(ideal_intersect(comps[0].component, comps[1].component), i));
}

TEST(Primdec, MaximalityChecks) {
  auto r = ring_q({"x", "y", "z"});
  auto c = check_maximal(polys(r, {"x - z", "y - z^2", "z^3 - z - 1"}));
  EXPECT_TRUE(c.maximal);
  EXPECT_EQ(c.dimension, 3u);
  EXPECT_EQ(c.minimal_polynomial.degree(), 3);
  EXPECT_TRUE(is_irreducible(c.minimal_polynomial));

  auto r2 = ring_q({"x", "y"});
  auto split = check_maximal(polys(r2, {"x^2 - 2", "y^2 - 2"}));
  EXPECT_FALSE(split.maximal);
  EXPECT_EQ(split.dimension, 4u);
  EXPECT_FALSE(is_irreducible(split.minimal_polynomial));
  EXPECT_EQ(primary_decomposition(polys(r2, {"x^2 - 2", "y^2 - 2"})).size(), 2u);

  EXPECT_TRUE(check_maximal(polys(r, {"x", "y", "z"})).maximal);
}

TEST(Primdec, TriangularGenerators) {
  auto r = ring_q({"x", "y", "z"});
  auto g = triangular_generators(polys(r, {"x - z", "y - z^2", "z^3 - z - 1"}));
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], poly(g[0].ring(), "x - z"));
  EXPECT_EQ(g[1], poly(g[1].ring(), "y - z^2"));
  EXPECT_EQ(g[2], poly(g[2].ring(), "z^3 - z - 1"));
  auto r2 = ring_q({"x", "y"});
  EXPECT_EQ(texts(triangular_generators(polys(r2, {"y", "x"}))),
            (std::vector<std::string>{"x", "y"}));
  auto r1 = ring_q({"x"});
  EXPECT_EQ(texts(triangular_generators(polys(r1, {"3*x - 6"}))),
            (std::vector<std::string>{"x - 2"}));
  try {
    triangular_generators(polys(r2, {"x^2", "x*y", "y^2"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMaximal);
  }
}

TEST(Primdec, UnsupportedFields) {
  auto k = Ring::make(FieldDescriptor::function_field({"c"}), {"x"});
  try {
    primary_decomposition(polys(k, {"x^2 - c"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField);
  }
}

TEST(Primdec, DecompositionInvariants) {
  for (std::uint32_t p : {0u, 32003u, 7u}) {
    auto r = p == 0 ? ring_q({"x", "y", "z"}) : ring_fp(p, {"x", "y", "z"});
    IdealFactory gen(r, 51 + p);
    for (int k = 0; k < 25; ++k) {
      auto i = gen.any().generators;
      auto comps = primary_decomposition(i);
      std::size_t total = 0;
      std::vector<Polynomial> meet;
      for (std::size_t a = 0; a < comps.size(); ++a) {
        const auto& c = comps[a];
        total += c.multiplicity;
        ASSERT_EQ(c.multiplicity, hilbert_data(c.component).mu);
        ASSERT_TRUE(check_maximal(c.radical).maximal);
        ASSERT_TRUE(ideal_equal(radical_zero_dim(c.component), c.radical));
        ASSERT_EQ(c.triangular.size(), 3u);
        for (std::size_t v = 0; v < 3; ++v)
          ASSERT_EQ(c.triangular[v].leading_monomial().pure_power_variable(), static_cast<int>(v));
        auto tri = in_ring(c.triangular, r);
        ASSERT_TRUE(ideal_equal(tri, c.radical));
        meet = a == 0 ? c.component : ideal_intersect(meet, c.component);
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
          auto sum = c.component;
          sum.insert(sum.end(), comps[b].component.begin(), comps[b].component.end());
          ASSERT_TRUE(buchberger(sum).is_unit());
        }
      }
      ASSERT_EQ(total, hilbert_data(i).mu);
      ASSERT_TRUE(ideal_equal(meet, i));
    }
  }
}
