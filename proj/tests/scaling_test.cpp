#include "ddp/error.hpp"
#include "ddp/evaluator.hpp"
#include "ddp/scaling.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ddp;
using namespace ddp::airy;

TEST(Scaling, VariableMap) {
  const ScalingInput in{0.002, 0.01, 1e-4};
  const double r4 = std::pow(2.0, 0.25);
  EXPECT_NEAR(in.s1(), 3 * r4 * (0.01 - 0.003) * std::pow(1e-4, -0.75), 1e-9);
  EXPECT_NEAR(in.s2(), 27 * std::sqrt(2.0) / 8 * (0.002 + 1e-4 / 40) / 1e-2, 1e-12);
  EXPECT_EQ((ScalingInput{0, 0, 0.1}.s1()), 0.0);
}

// Two routes to the same ratio: extended-precision sums of φ against the
// double-precision backward recursion.
TEST(Scaling, DirectSumsMatchRecursion) {
  for (auto [tau, delta, eps] : {std::tuple{0.0, 0.0, 0.01}, {0.01, 0.0, 0.02}, {0.0, 0.01, 0.005},
                                 {0.05, -0.02, 0.05}}) {
    int digits = 0;
    const double l1 = log_phi_direct(tau, delta, eps, 1, &digits);
    const double l0 = log_phi_direct(tau, delta, eps, 0);
    EXPECT_GE(digits, 100);
    const auto r = evaluator::eval_G_backward(evaluator::ModelPoint::from_natural(delta, tau, eps));
    EXPECT_NEAR(l1 - l0, std::log(r.G), 1e-11) << tau << "," << delta << "," << eps;
  }
}

TEST(Scaling, UniformApproximationErrorShrinks) {
  for (int k = 0; k < 2; ++k) {
    const auto a = proposition1_check_natural(0, 0, 0.02, k);
    const auto b = proposition1_check_natural(0, 0, 0.005, k);
    EXPECT_LT(a.rel_error, 1e-2);
    EXPECT_LT(b.rel_error, a.rel_error / 2);
    EXPECT_TRUE(std::isfinite(b.log_lhs));
  }
}

TEST(Scaling, NaturalAndModelCoordinatesAgree) {
  const auto a = proposition1_check_natural(0.01, 0.0, 0.01, 1);
  const auto b = proposition1_check(1.0 / 9.0, 1.0 / 3.0 - 0.01, 0.01, 1);
  EXPECT_NEAR(a.log_lhs, b.log_lhs, 1e-12);
  EXPECT_NEAR(a.log_rhs, b.log_rhs, 1e-12);
}

TEST(Scaling, ShiftOutsideRangeRejected) {
  EXPECT_THROW(proposition1_log_rhs(uniform_coeffs(0, 0), 0.01, 2), std::invalid_argument);
}

TEST(Scaling, Theorem1DeviationDecays) {
  const auto a = theorem1_check({0, 0, 1e-4});
  const auto b = theorem1_check({0, 0, 1e-5});
  EXPECT_NEAR(a.lhs, 2.681875654868, 1e-9);
  EXPECT_NEAR(b.rhs, 2.80384354211027, 1e-9);
  // next order is ε^{1/2}: the ratio per decade is close to √10
  const double ratio = a.deviation / b.deviation;
  EXPECT_GT(ratio, 2.8);
  EXPECT_LT(ratio, 3.5);
}

TEST(Scaling, FPolesBracketed) {
  const auto p = F_poles(-7, 0);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p[0], -5.995905345, 1e-8);
  EXPECT_NEAR(p[1], -4.332510178, 1e-8);
  EXPECT_NEAR(p[2], -2.427523453, 1e-8);
  EXPECT_TRUE(F_poles(-2, 2).empty());
}

TEST(Scaling, FExactAtZero) {
  // no pole near the origin, so F is smooth there
  const double f0 = F_exact(0.0);
  EXPECT_TRUE(std::isfinite(f0));
  EXPECT_NEAR(F_exact(1e-6), f0, 1e-4);
}

TEST(Scaling, Fig7SmallGridApproaches) {
  const std::vector<double> s{-1.0, 0.0, 0.5};
  const auto d = fig7_data(s, {1e-4, 1e-6}, 2);
  ASSERT_EQ(d.exact.size(), 3u);
  ASSERT_EQ(d.approx.size(), 2u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(d.s[i], s[i]);
    EXPECT_LT(std::abs(d.approx[1][i] - d.exact[i]), std::abs(d.approx[0][i] - d.exact[i]));
  }
}

TEST(Scaling, FEpsilonMatchesDefinition) {
  evaluator::EvalOptions opt;
  const double s = -0.7, eps = 1e-4;
  const double g = evaluator::eval_G_backward({-1.0 / 9.0, (1 - s * std::pow(eps, 0.75)) / 3, eps}, opt).G;
  EXPECT_NEAR(F_epsilon(s, eps, opt), (g / 3 - 1) * std::pow(eps, -0.25), 1e-12);
}

TEST(Fits, ExactPowerLaw) {
  const auto x = log_spaced(1e-4, 1e-1, 7);
  ASSERT_EQ(x.size(), 7u);
  EXPECT_NEAR(x.front(), 1e-4, 1e-18);
  EXPECT_NEAR(x.back(), 1e-1, 1e-15);
  EXPECT_NEAR(x[1] / x[0], x[6] / x[5], 1e-12);
  std::vector<double> y;
  for (double v : x) y.push_back(2.5 * std::pow(v, 0.75));
  const auto f = loglog_fit(x, y);
  EXPECT_NEAR(f.exponent, 0.75, 1e-12);
  EXPECT_NEAR(f.intercept, std::log(2.5), 1e-11);
  EXPECT_NEAR(f.r2, 1.0, 1e-12);
  EXPECT_FALSE(f.flagged);
}

TEST(Fits, NoisyDataFlagged) {
  const std::vector<double> x{1, 2, 3, 4, 5}, y{1, 5, 0.5, 9, 0.2};
  EXPECT_TRUE(loglog_fit(x, y).flagged);
  EXPECT_THROW(loglog_fit({1.0}, {1.0}), std::invalid_argument);
}

TEST(Fits, GammaTAtZeroWeight) {
  // w = 0 is the square-root branch point of the Catalan generating function.
  const auto f = fit_gamma_t(0.0, log_spaced(1e-6, 1e-3, 9));
  EXPECT_NEAR(f.exponent, 0.5, 0.02);
  EXPECT_FALSE(f.flagged);
}

TEST(Fits, Table1Layout) {
  const auto rows = table1_report();
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].label, "w=-1/9");
  EXPECT_NEAR(rows[0].expected_phi_cr(), 0.75, 1e-15);
  EXPECT_EQ(rows[1].label, "w=0");
  EXPECT_NEAR(rows[1].expected_phi_cr(), 2.0 / 3.0, 1e-15);
  for (const auto& r : rows) {
    EXPECT_TRUE(std::isfinite(r.phi_cr()));
    EXPECT_EQ(r.gamma_u.x.size(), 9u);
  }
}
