#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wakefarm/reduction_table.hpp"
#include "wakefarm/rng.hpp"
#include "wakefarm/wake.hpp"

namespace wakefarm {
namespace {

using testing::ConstantWake;

TEST(LocalFrame, IdentityFrame) {
  const LocalFrame f = to_local_frame({0, 0}, {10, 5}, {1, 0});
  EXPECT_EQ(f.downstream, 10.0);
  EXPECT_EQ(f.cross, 5.0);
}

TEST(LocalFrame, RotatedFrame) {
  const LocalFrame f = to_local_frame({0, 0}, {10, 5}, {0, 1});
  EXPECT_EQ(f.downstream, 5.0);
  EXPECT_EQ(f.cross, -10.0);
  EXPECT_DOUBLE_EQ(f.downstream * f.downstream + f.cross * f.cross, 125.0);
}

TEST(LocalFrame, IsIsometric) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0, 6.283185307179586);
    const Vec2 t{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    const Vec2 q{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    const LocalFrame f = to_local_frame(t, q, {std::cos(a), std::sin(a)});
    const Vec2 d = q - t;
    EXPECT_NEAR(f.downstream * f.downstream + f.cross * f.cross, dot(d, d), 1e-9);
  }
}

TEST(LocalFrame, RejectsBadDirections) {
  EXPECT_THROW(to_local_frame({0, 0}, {1, 1}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(to_local_frame({0, 0}, {1, 1}, {2, 0}), std::invalid_argument);
}

TEST(JensenWake, UpstreamIsUnity) {
  const JensenWake w(TurbineSpec{20.0, 0.84, 10.0});
  EXPECT_EQ(w.factor({0.0, 0.0}), 1.0);
  EXPECT_EQ(w.factor({-30.0, 0.0}), 1.0);
}

TEST(JensenWake, ClosedFormExample) {
  const JensenWake w(TurbineSpec{20.0, 0.84, 10.0}, 0.05);
  // 1 - (1 - sqrt(1 - 0.84)) * (20 / 22)^2
  EXPECT_NEAR(w.factor({20.0, 0.0}), 0.5041322314049588, 1e-15);
  EXPECT_NEAR(w.factor({20.0, 0.0}), 0.50413, 5e-6);
}

TEST(JensenWake, OutsideConeIsUnity) {
  const JensenWake w(TurbineSpec{20.0, 0.84, 10.0}, 0.05);
  EXPECT_EQ(w.factor({20.0, 12.0}), 1.0);
  EXPECT_LT(w.factor({20.0, 10.9}), 1.0);
}

TEST(JensenWake, GradientMatchesDifferencesInsideCone) {
  const JensenWake w(TurbineSpec{20.0, 0.8, 10.0});
  for (double x0 : {5.0, 40.0, 300.0}) {
    const double h = 1e-3;
    const double fd = (w.factor({x0 + h, 0.0}) - w.factor({x0 - h, 0.0})) / (2 * h);
    EXPECT_NEAR(w.gradient({x0, 0.0}).x, fd, 1e-5 * std::abs(fd));
    EXPECT_EQ(w.gradient({x0, 0.0}).y, 0.0);
  }
}

std::vector<const WakeModel*> pointers(const std::vector<std::shared_ptr<WakeModel>>& models) {
  std::vector<const WakeModel*> out;
  for (const auto& m : models) out.push_back(m.get());
  return out;
}

TEST(CombinedFactor, SingleTurbineExcludesItself) {
  const JensenWake w(TurbineSpec{});
  const WakeModel* models[] = {&w};
  const auto flow = uniform_flow({2.0, 0.0});
  EXPECT_EQ(combined_factor(models, Layout({5.0, 5.0}), {5.0, 5.0}, *flow), 1.0);
}

TEST(CombinedFactor, ProductOfUpstreamFactors) {
  const ConstantWake a(0.9), b(0.8);
  const WakeModel* models[] = {&a, &b};
  const auto flow = uniform_flow({2.0, 0.0});
  const Layout l({0.0, 0.0, 50.0, 0.0});
  EXPECT_DOUBLE_EQ(combined_factor(models, l, {100.0, 0.0}, *flow), 0.72);
}

TEST(CombinedFactor, AcceleratingFactors) {
  const ConstantWake a(1.1), b(0.8);
  const WakeModel* models[] = {&a, &b};
  const auto flow = uniform_flow({2.0, 0.0});
  EXPECT_DOUBLE_EQ(combined_factor(models, Layout({0.0, 0.0, 50.0, 0.0}), {100.0, 0.0}, *flow), 0.88);
}

TEST(CombinedFactor, UsesAmbientDirectionAtSource) {
  const ConstantWake a(0.5, 1.0);
  const WakeModel* models[] = {&a};
  const auto flow = uniform_flow({0.0, -3.0});  // flowing towards -y
  const Layout l({0.0, 100.0});
  EXPECT_EQ(combined_factor(models, l, {0.0, 50.0}, *flow), 0.5);
  EXPECT_EQ(combined_factor(models, l, {0.0, 150.0}, *flow), 1.0);
}

TEST(CombinedFactor, PermutationInvariantExactly) {
  const auto table = std::make_shared<ReductionTable>(synth_swe_like_table(TurbineSpec{}, 2.0));
  const auto flow = linear_gradient_flow();
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec2> pts(6);
    for (auto& p : pts) p = {rng.uniform(0, 200), rng.uniform(0, 60)};
    const Vec2 q{rng.uniform(100, 300), rng.uniform(0, 60)};
    std::vector<const WakeModel*> models(pts.size(), table.get());
    const double c0 = combined_factor(models, Layout::pack(pts), q, *flow);
    std::reverse(pts.begin(), pts.end());
    std::rotate(pts.begin(), pts.begin() + 2, pts.end());
    EXPECT_EQ(combined_factor(models, Layout::pack(pts), q, *flow), c0);
  }
}

TEST(CombinedFactor, JensenUpstreamNeutrality) {
  const JensenWake w(TurbineSpec{});
  const auto flow = uniform_flow({2.0, 0.0});
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec2> pts(5);
    for (auto& p : pts) p = {rng.uniform(100, 300), rng.uniform(-50, 50)};
    const Vec2 q{rng.uniform(-100, 99), rng.uniform(-60, 60)};
    std::vector<const WakeModel*> models(pts.size(), &w);
    EXPECT_EQ(combined_factor(models, Layout::pack(pts), q, *flow), 1.0);
  }
}

TEST(CombinedFactor, AppendingUpstreamTurbineNeverIncreasesFactor) {
  const JensenWake w(TurbineSpec{});
  const auto flow = uniform_flow({2.0, 0.0});
  std::vector<Vec2> pts;
  std::vector<const WakeModel*> models;
  const Vec2 q{500.0, 0.0};
  double prev = 1.0;
  for (int k = 0; k < 6; ++k) {
    pts.push_back({400.0 - 60.0 * k, 0.0});
    models.push_back(&w);
    const double c = combined_factor(models, Layout::pack(pts), q, *flow);
    EXPECT_LE(c, prev);
    prev = c;
  }
}

TEST(CombinedFactor, RejectsZeroFlowAtTurbine) {
  const JensenWake w(TurbineSpec{});
  const WakeModel* models[] = {&w};
  GriddedField g{GridGeometry{2, 2, 0, 0, 1, 1}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}};
  EXPECT_THROW(combined_factor(models, Layout({0.5, 0.5}), {3.0, 0.5}, *gridded_flow(g)), std::domain_error);
}

TEST(ReducedVelocity, ScalesAmbient) {
  const auto flow = uniform_flow({2.0, 0.0});
  const ConstantWake half(0.5);
  const WakeModel* models[] = {&half};
  const Vec2 u = reduced_velocity(models, Layout({0.0, 0.0}), {10.0, 0.0}, *flow);
  EXPECT_EQ(u.x, 1.0);
  EXPECT_EQ(u.y, 0.0);
  const Vec2 free = reduced_velocity(models, Layout({0.0, 0.0}), {-10.0, 0.0}, *flow);
  EXPECT_EQ(free.x, 2.0);
}

TEST(ReducedVelocity, AlignedRowSlowsDownstream) {
  const auto table = std::make_shared<ReductionTable>(synth_swe_like_table(TurbineSpec{}, 2.0));
  const auto flow = uniform_flow({2.0, 0.0});
  const Layout row({0.0, 0.0, 100.0, 0.0, 200.0, 0.0});
  std::vector<const WakeModel*> models(3, table.get());
  double prev = 1e9;
  for (std::size_t i = 0; i < 3; ++i) {
    const double s = norm(reduced_velocity(models, row, row.position(i), *flow));
    EXPECT_LT(s, prev);
    prev = s;
  }
}

TEST(ReducedVelocity, IsolatedTurbineSeesAmbient) {
  const auto table = std::make_shared<ReductionTable>(synth_swe_like_table(TurbineSpec{}, 2.0));
  const auto flow = linear_gradient_flow();
  const WakeModel* models[] = {table.get()};
  const Vec2 p{123.0, 45.0};
  EXPECT_EQ(reduced_velocity(models, Layout({p.x, p.y}), p, *flow).x, flow->velocity(p).x);
}

}  // namespace
}  // namespace wakefarm
