#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "oracles.hpp"
#include "wakefarm/power.hpp"
#include "wakefarm/reduction_table.hpp"
#include "wakefarm/taylor.hpp"

namespace wakefarm {
namespace {

using testing::ConstantWake;

const Site kWide{-1000.0, 1000.0, -1000.0, 1000.0};

PowerFunctional make(FlowPtr flow, WakePtr wake, double alpha = 1.0, Site site = kWide) {
  PowerFunctional f{alpha, std::move(flow), std::move(wake), site};
  f.validate();
  return f;
}

std::shared_ptr<const ReductionTable> shared_table() {
  static const auto t = std::make_shared<const ReductionTable>(synth_swe_like_table(TurbineSpec{}, 2.0));
  return t;
}

Layout random_layout_in(int n, double w, double h, Rng& rng) {
  return random_layout(n, Site{0.0, w, 0.0, h}, rng);
}

TEST(PowerFunctional, SingleTurbineInUniformFlow) {
  const auto f = make(uniform_flow({2.0, 0.0}), std::make_shared<ConstantWake>(0.5));
  EXPECT_EQ(f.value(Layout({0.0, 0.0})), 8.0);
}

TEST(PowerFunctional, SideBySideTurbinesDoNotInteract) {
  const auto f = make(uniform_flow({2.0, 0.0}), std::make_shared<JensenWake>(TurbineSpec{}));
  EXPECT_EQ(f.value(Layout({0.0, 0.0, 0.0, 100.0})), 16.0);
}

TEST(PowerFunctional, DownstreamTurbineSeesHalfSpeed) {
  const auto f = make(uniform_flow({2.0, 0.0}), std::make_shared<ConstantWake>(0.5));
  EXPECT_EQ(f.value(Layout({0.0, 0.0, 100.0, 0.0})), 9.0);
}

TEST(PowerFunctional, GradientVanishesInUniformFlowWithoutWakes) {
  const auto f = make(uniform_flow({2.0, 0.0}), std::make_shared<ConstantWake>(0.5));
  for (double g : f.gradient(Layout({0.0, 0.0}))) EXPECT_EQ(g, 0.0);
}

TEST(PowerFunctional, GradientPointsUpTheLinearFlow) {
  const auto f = make(linear_gradient_flow(), shared_table());
  const auto g = f.gradient(Layout({100.0, 50.0}));
  EXPECT_GT(g[0], 0.0);
  EXPECT_GT(g[1], 0.0);
  // d/dx |u|^3 for u = (1 + x/1280, 1 + y/640)
  const double ux = 1.0 + 100.0 / 1280.0, uy = 1.0 + 50.0 / 640.0;
  const double s = std::hypot(ux, uy);
  EXPECT_NEAR(g[0], 3.0 * s * ux / 1280.0, 1e-14);
  EXPECT_NEAR(g[1], 3.0 * s * uy / 640.0, 1e-14);
}

TEST(PowerFunctional, GradientMatchesCentralDifferences) {
  const auto f = make(linear_gradient_flow(), shared_table());
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 7;
    const Layout m = random_layout_in(n, 320.0, 160.0, rng);
    const auto g = f.gradient(m);
    const auto fd = testing::central_differences([&](const Layout& l) { return f.value(l); }, m, 1e-2);
    EXPECT_LT(testing::relative_error(g, fd), 1e-5) << "layout " << trial << " with " << n << " turbines";
  }
}

TEST(PowerFunctional, ValueAndGradientAgreeWithSeparateCalls) {
  const auto f = make(linear_gradient_flow(), shared_table());
  Rng rng(22);
  const Layout m = random_layout_in(6, 320.0, 160.0, rng);
  const auto both = f.value_and_gradient(m);
  EXPECT_DOUBLE_EQ(both.value, f.value(m));
  EXPECT_EQ(both.gradient, f.gradient(m));
  EXPECT_EQ(evaluate_power(f, m), f.value(m));
  EXPECT_EQ(evaluate_gradient(f, m), f.gradient(m));
}

TEST(PowerFunctional, TranslationInUniformFlowIsExact) {
  const auto f = make(uniform_flow({2.0, 0.0}), std::make_shared<JensenWake>(TurbineSpec{}));
  const Layout m({0.0, 0.0, 60.0, 4.0, 150.0, -8.5, 215.25, 2.0});
  Layout shifted = m;
  for (std::size_t k = 0; k < m.size(); ++k) shifted[k] += k % 2 == 0 ? 64.0 : -32.0;
  EXPECT_EQ(f.value(shifted), f.value(m));
}

TEST(PowerFunctional, ScalesWithCubeOfSpeed) {
  const Layout m({0.0, 0.0, 60.0, 4.0, 150.0, -8.5});
  const auto slow = make(uniform_flow({2.0, 0.0}), std::make_shared<JensenWake>(TurbineSpec{}));
  const auto fast = make(uniform_flow({4.0, 0.0}), std::make_shared<JensenWake>(TurbineSpec{}));
  EXPECT_EQ(fast.value(m), 8.0 * slow.value(m));
}

TEST(PowerFunctional, InvariantUnderTurbineRelabelling) {
  const auto f = make(linear_gradient_flow(), shared_table());
  Rng rng(23);
  const Layout m = random_layout_in(7, 320.0, 160.0, rng);
  auto pts = m.unpack();
  std::reverse(pts.begin(), pts.end());
  EXPECT_NEAR(f.value(Layout::pack(pts)), f.value(m), 1e-13 * f.value(m));
}

TEST(PowerFunctional, RejectsMissingPieces) {
  PowerFunctional f{1.0, nullptr, shared_table(), kWide};
  EXPECT_THROW(f.validate(), std::invalid_argument);
  f = PowerFunctional{1.0, uniform_flow({1.0, 0.0}), nullptr, kWide};
  EXPECT_THROW(f.validate(), std::invalid_argument);
}

TEST(Alpha, BumpFootprintArea) {
  EXPECT_NEAR(bump_footprint_area(10.0), 145.66083883006448, 1e-9);
  // Area scales with the square of the radius.
  EXPECT_NEAR(bump_footprint_area(20.0), 4.0 * bump_footprint_area(10.0), 1e-8);
}

TEST(Alpha, DefaultForTwentyMetreRotor) {
  EXPECT_NEAR(default_alpha(TurbineSpec{}), 1529438.807715677, 1e-4);
  EXPECT_NEAR(default_alpha(TurbineSpec{}), 0.5 * 1000.0 * 21.0 * bump_footprint_area(10.0), 1e-6);
}

struct Quadratic {
  double value(const Layout& m) const {
    double s = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k) s += (m[k] - 1.0) * (m[k] - 1.0);
    return -s;
  }
  std::vector<double> gradient(const Layout& m) const {
    std::vector<double> g(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) g[k] = -2.0 * (m[k] - 1.0);
    return g;
  }
};

TEST(Taylor, QuadraticHasSecondOrderRemainder) {
  const Layout m({3.0, -2.0, 0.5, 7.0});
  Rng rng(24);
  const auto d = random_unit_direction(4, rng);
  const TaylorReport r = taylor_remainder_test(Quadratic{}, m, d, 0.5, 6);
  ASSERT_TRUE(r.slope_gradient.has_value());
  EXPECT_NEAR(*r.slope_gradient, 2.0, 1e-6);
  EXPECT_NEAR(*r.slope_plain, 1.0, 0.1);
  EXPECT_FALSE(r.degenerate());
}

TEST(Taylor, ZeroDirectionIsDegenerate) {
  const std::vector<double> d(4, 0.0);
  const TaylorReport r = taylor_remainder_test(Quadratic{}, Layout({3.0, -2.0, 0.5, 7.0}), d, 0.5, 6);
  EXPECT_TRUE(r.degenerate());
  EXPECT_FALSE(r.slope_gradient.has_value());
}

TEST(Taylor, RejectsTooFewLevels) {
  const std::vector<double> d(2, 1.0);
  EXPECT_THROW(taylor_remainder_test(Quadratic{}, Layout({0.0, 0.0}), d, 0.5, 3), std::invalid_argument);
}

TEST(Taylor, RandomDirectionHasUnitNorm) {
  Rng rng(25);
  const auto d = random_unit_direction(16, rng);
  double s = 0.0;
  for (double v : d) s += v * v;
  EXPECT_NEAR(s, 1.0, 1e-14);
}

TEST(Taylor, LogLogSlopeOfPowerLaw) {
  const std::vector<double> x{1.0, 0.5, 0.25, 0.125};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v * v * v);
  EXPECT_NEAR(*fit_loglog_slope(x, y), 3.0, 1e-12);
}

TEST(Taylor, WakeObjectiveOrders) {
  const Site site{0.0, 640.0, 0.0, 320.0};
  const auto f = make(linear_gradient_flow(), shared_table(), default_alpha(TurbineSpec{}), site);
  Rng rng(26);
  const Layout m = random_layout(2, site, rng);
  for (int k = 0; k < 5; ++k) {
    const auto d = random_unit_direction(m.size(), rng);
    const TaylorReport r = taylor_remainder_test(f, m, d, 0.5, 6);
    ASSERT_FALSE(r.degenerate());
    EXPECT_NEAR(*r.slope_plain, 1.0, 0.1);
    EXPECT_NEAR(*r.slope_gradient, 2.0, 0.1);
  }
}

}  // namespace
}  // namespace wakefarm
