#include "ddp/error.hpp"
#include "ddp/saddle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace ddp;
using namespace ddp::saddle;
constexpr double pi = std::numbers::pi;

TEST(Phase, RejectsNonPositiveT) {
  EXPECT_THROW(PhaseContext(0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(PhaseContext(0.1, -1.0), std::invalid_argument);
}

TEST(Phase, DerivativeMatchesFiniteDifference) {
  const PhaseContext ctx(0.11, 0.31);
  const Complex z(0.4, 0.3);
  const double h = 1e-5;
  const Complex fd = (f_eval(ctx, z + h) - f_eval(ctx, z - h)) / (2 * h);
  EXPECT_LT(std::abs(fd - f_prime(ctx, z)), 1e-9);
  for (int n = 2; n <= 4; ++n) {
    const Complex fdn = (f_derivative(ctx, z + h, n - 1) - f_derivative(ctx, z - h, n - 1)) / (2 * h);
    EXPECT_LT(std::abs(fdn - f_derivative(ctx, z, n)), 1e-7 * std::max(1.0, std::abs(fdn))) << n;
  }
  EXPECT_THROW(f_derivative(ctx, z, 0), std::invalid_argument);
}

TEST(Phase, BranchCutPolicy) {
  const PhaseContext strict(0.11, 0.31);
  EXPECT_THROW(f_eval(strict, Complex(-0.5, 0.0)), BranchCutError);
  EXPECT_THROW(f_eval(strict, Complex(1.5, 0.0)), BranchCutError);
  EXPECT_NO_THROW(f_eval(strict, Complex(0.5, 0.0)));
  const PhaseContext on_cut(0.11, 0.31, CutPolicy::OnCut);
  EXPECT_NO_THROW(f_eval(on_cut, Complex(-0.5, 0.0)));
}

TEST(Phase, AmplitudePositiveBetweenAAndOne) {
  const PhaseContext ctx(0.11, 0.31);
  for (double x : {0.2, 0.5, 0.9}) {
    EXPECT_GT(g0(ctx, Complex(x)).real(), 0.0);
    EXPECT_NEAR(g0(ctx, Complex(x)).imag(), 0.0, 1e-15);
  }
}

TEST(Saddles, AreStationaryPointsWithSmallResiduals) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ua(-0.2, 0.3), ut(0.05, 0.6);
  for (int i = 0; i < 100; ++i) {
    const PhaseContext ctx(ua(rng), ut(rng));
    const auto s = saddles(ctx);
    for (double r : s.symmetric_residuals) EXPECT_LT(r, 1e-12);
    for (const auto& z : s.z)
      if (!ctx.on_cut(z)) EXPECT_LT(std::abs(f_prime(ctx, z)), 1e-9 * std::max(1.0, 1.0 / std::abs(z)));
  }
}

TEST(Saddles, CriticalCurves) {
  EXPECT_NEAR(t_c_plus(0.0).value(), 0.25, 1e-15);
  EXPECT_NEAR(z_c_plus(0.0).value(), 0.5, 1e-15);
  EXPECT_NEAR(t_c_plus(1.0 / 9.0).value(), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(t_c_minus(1.0 / 9.0).value(), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(z_c_minus(1.0 / 9.0).value(), 1.0 / 3.0, 1e-14);
  EXPECT_FALSE(t_c_plus(0.5).has_value());
  // At t_c± two saddles coalesce at z_c±.
  const double a = 0.05;
  const PhaseContext ctx(a, t_c_plus(a).value());
  const auto s = saddles(ctx);
  int close = 0;
  for (const auto& z : s.z) close += std::abs(z - z_c_plus(a).value()) < 1e-6;
  EXPECT_EQ(close, 2);
}

TEST(Saddles, CaseTagsAndLabeling) {
  EXPECT_EQ(saddles(PhaseContext(-0.05, 0.3)).case_tag, SaddleCase::i);
  EXPECT_EQ(saddles(PhaseContext(0.0, 0.3)).case_tag, SaddleCase::ii);
  EXPECT_EQ(saddles(PhaseContext(1.0 / 9.0, 0.3)).case_tag, SaddleCase::iv);
  EXPECT_EQ(saddles(PhaseContext(0.2, 0.3)).case_tag, SaddleCase::v);

  const auto below = saddles(PhaseContext(0.11, 0.31));
  EXPECT_EQ(below.case_tag, SaddleCase::iii_below);
  // conjugate pair first, then the real saddle to its right
  EXPECT_GT(below.z[0].imag(), 0.0);
  EXPECT_EQ(below.z[1], std::conj(below.z[0]));
  EXPECT_EQ(below.z[2].imag(), 0.0);
  EXPECT_GT(below.z[2].real(), below.z[0].real());

  EXPECT_EQ(saddles(PhaseContext(0.11, 0.3317)).case_tag, SaddleCase::iii_between);

  const auto above = saddles(PhaseContext(0.11, 0.34));
  EXPECT_EQ(above.case_tag, SaddleCase::iii_above);
  EXPECT_EQ(above.z[0].imag(), 0.0);
  EXPECT_GT(above.z[2].imag(), 0.0);
  EXPECT_EQ(above.z[1], std::conj(above.z[2]));
  EXPECT_EQ(to_string(SaddleCase::iii_above), "iii_above");
}

TEST(Saddles, TripleCoalescence) {
  const auto s = saddles(PhaseContext(1.0 / 9.0, 1.0 / 3.0));
  for (const auto& z : s.z) EXPECT_LT(std::abs(z - 1.0 / 3.0), 1e-4);
}

TEST(Takeoff, OrderAndAngles) {
  int order = 0;
  const PhaseContext generic(0.11, 0.31);
  const auto s = saddles(generic);
  EXPECT_EQ(takeoff_angles(generic, s.z[2], &order).size(), 2u);
  EXPECT_EQ(order, 2);
  const PhaseContext triple(1.0 / 9.0, 1.0 / 3.0);
  EXPECT_EQ(takeoff_angles(triple, Complex(1.0 / 3.0), &order).size(), 4u);
  EXPECT_EQ(order, 4);
}

class Descent : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(Descent, UpperPathFromZ3) {
  const auto [a, t] = GetParam();
  const PhaseContext ctx(a, t);
  const auto p = trace_descent(ctx, saddles(ctx).z[2], Direction::Upper);
  EXPECT_LT(p.im_f_drift, 1e-6);
  EXPECT_TRUE(p.monotone);
  EXPECT_EQ(p.end_reason, "radius");
  EXPECT_NEAR(p.terminal_arg, pi / 2, 0.05);
  for (std::size_t i = 0; i < p.points.size(); ++i)
    EXPECT_LT(std::abs(p.f_values[i].imag() - p.f_values[0].imag()), 1e-6);
}

INSTANTIATE_TEST_SUITE_P(Fig5, Descent,
                         ::testing::Values(std::pair{0.11, 0.31}, std::pair{0.11, 0.3317},
                                           std::pair{1.0 / 9.0, 1.0 / 3.0}, std::pair{0.11, 0.34}));

TEST(Descent, LowerPathMirrorsUpperForRealSaddle) {
  const PhaseContext ctx(0.11, 0.31);
  const auto z3 = saddles(ctx).z[2];
  const auto up = trace_descent(ctx, z3, Direction::Upper);
  const auto lo = trace_descent(ctx, z3, Direction::Lower);
  EXPECT_NEAR(lo.terminal_arg, -up.terminal_arg, 1e-9);
}

TEST(Descent, LowerPathFromComplexSaddleEndsAtOrigin) {
  // Re f → −∞ as z → 0, so this branch descends into the origin
  const PhaseContext ctx(0.11, 0.34);
  const auto p = trace_descent(ctx, saddles(ctx).z[2], Direction::Lower);
  EXPECT_EQ(p.end_reason, "origin");
  EXPECT_TRUE(p.monotone);
  EXPECT_LT(p.im_f_drift, 1e-10);
  EXPECT_LT(p.f_values.back().real(), -100.0);
}

TEST(Descent, FarFieldArgumentLaw) {
  // On Im f = const with |z| large the argument approaches π/(2 − ln t/ln|z|).
  const PhaseContext ctx(1.0 / 9.0, 1.0 / 3.0);
  const auto p = trace_descent(ctx, Complex(1.0 / 3.0), Direction::Upper);
  for (double r : {50.0, 1e4, 1e8}) {
    auto it = std::find_if(p.points.begin(), p.points.end(), [&](Complex z) { return std::abs(z) >= r; });
    ASSERT_NE(it, p.points.end());
    const double predicted = pi / (2.0 - std::log(ctx.t) / std::log(std::abs(*it)));
    EXPECT_NEAR(std::arg(*it), predicted, 0.1 * (pi / 2 - predicted)) << r;
  }
}

TEST(R1Bound, ClosedValues) {
  EXPECT_NEAR(r1_bound(Complex(0.0, 1.0)), pi / 24, 1e-14);
  EXPECT_NEAR(r1_bound(Complex(0.0, -1.0)), pi / 24, 1e-14);
  EXPECT_THROW(r1_bound(Complex(2.0, 0.0)), std::domain_error);
}
