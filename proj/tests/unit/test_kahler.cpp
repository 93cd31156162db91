#include <gtest/gtest.h>

#include "helpers.hpp"
#include "zdci/ci.hpp"
#include "zdci/error.hpp"
#include "zdci/format.hpp"
#include "zdci/kahler.hpp"

using namespace zdci;
using namespace zdci::testing;

TEST(Kahler, PurePowerInItsCharacteristic) {
  for (std::uint32_t p : {2u, 5u}) {
    auto r = ring_fp(p, {"x"});
    auto gens = polys(r, {("x^" + std::to_string(p)).c_str()});
    auto report = kahler_different(gens, KahlerTarget::DegreeForm);
    ASSERT_EQ(report.jacobian.size(), 1u);
    EXPECT_TRUE(report.jacobian[0][0].is_zero());
    EXPECT_TRUE(report.theta_generators.empty());
    EXPECT_EQ(report.mu, p);
    EXPECT_FALSE(report.char_ok);
    EXPECT_FALSE(report.verdict_if_applicable.has_value());
    EXPECT_TRUE(check_sci_macaulay(gens).verdict);
  }
}

TEST(Kahler, SquareMonomialIdeal) {
  auto r = ring_q({"x", "y"});
  auto report = kahler_different(polys(r, {"x^2", "y^2"}), KahlerTarget::Self);
  ASSERT_EQ(report.theta_generators.size(), 1u);
  EXPECT_EQ(to_string(report.theta_generators[0].residue), "4*x*y");
  EXPECT_TRUE(report.char_ok);
  EXPECT_EQ(report.verdict_if_applicable, std::optional<bool>(true));
}

TEST(Kahler, JacobianShape) {
  auto r = ring_q({"x", "y", "z"});
  auto gens = polys(r, {"x^2 - y", "y*z", "z^2 + x", "x*y*z"});
  auto report = kahler_different(gens, KahlerTarget::Self);
  ASSERT_EQ(report.jacobian.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    ASSERT_EQ(report.jacobian[i].size(), 3u);
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(report.jacobian[i][j], partial_derivative(gens[i], j));
  }
}

TEST(Kahler, StrictPlaneExampleAgrees) {
  auto r = ring_q({"x", "y"});
  auto gens = polys(r, {"x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1",
                        "x*y - y^5 + 2*y^4 - y^3 + 2*y^2",
                        "y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y"});
  auto report = kahler_different(gens, KahlerTarget::DegreeForm);
  EXPECT_EQ(report.mu, 9u);
  EXPECT_EQ(report.verdict_if_applicable, std::optional<bool>(true));
  EXPECT_EQ(report.verdict_if_applicable, std::optional<bool>(check_sci_macaulay(gens).verdict));
}

TEST(Kahler, LocalChecks) {
  auto r = ring_q({"x", "y", "z"});
  auto primary = polys(r, {"z^2 - y", "x^2 - 2*x*z + y", "y*z - z - 1", "y^2 - y - z"});
  EXPECT_TRUE(kahler_local_ci_check(primary).verdict);
  auto r2 = ring_q({"x", "y"});
  EXPECT_FALSE(kahler_local_ci_check(polys(r2, {"x^2", "x*y", "y^2"})).verdict);
  auto pts = kahler_local_ci_check(polys(r2, {"x^2 - x", "y"}));
  EXPECT_TRUE(pts.verdict);
  EXPECT_EQ(pts.components.size(), 2u);
}

TEST(Kahler, CharacteristicGuard) {
  auto r = ring_fp(3, {"x"});
  try {
    kahler_local_ci_check(polys(r, {"x^3*(x - 1)"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicObstruction);
  }
}

TEST(Kahler, AgreesWithFittingRouteWhenCharacteristicAllows) {
  for (std::uint32_t p : {0u, 32003u, 3u}) {
    auto r = p == 0 ? ring_q({"x", "y", "z"}) : ring_fp(p, {"x", "y", "z"});
    IdealFactory gen(r, 101 + p);
    int compared = 0;
    for (int k = 0; k < 30; ++k) {
      auto ideal = gen.any();
      auto kd = kahler_different(ideal.generators, KahlerTarget::DegreeForm);
      if (kd.char_ok) {
        ASSERT_TRUE(kd.verdict_if_applicable.has_value());
        ASSERT_EQ(*kd.verdict_if_applicable, check_sci_macaulay(ideal.generators).verdict)
            << ideal.kind;
        ++compared;
      } else {
        ASSERT_FALSE(kd.verdict_if_applicable.has_value());
      }
      try {
        auto local = kahler_local_ci_check(ideal.generators);
        ASSERT_EQ(local.verdict, check_locally_ci(ideal.generators).verdict) << ideal.kind;
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::CharacteristicObstruction);
        ASSERT_NE(p, 0u);
      }
    }
    if (p != 3) EXPECT_GT(compared, 25);
  }
}
