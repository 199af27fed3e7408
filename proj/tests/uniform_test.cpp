#include "ddp/error.hpp"
#include "ddp/saddle.hpp"
#include "ddp/uniform.hpp"
#include "ddp/verification/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace ddp;
using namespace ddp::airy;
using C = std::complex<double>;

TEST(Uniform, GammaAtOrigin) {
  const double ln3 = std::log(3.0);
  const double expect = 2.0 * oracle::dilog_series(C(1.0 / 3.0)).real() + 0.5 * ln3 * ln3;
  const auto c = uniform_coeffs(0, 0);
  EXPECT_NEAR(c.gamma, expect, 1e-12);
  EXPECT_NEAR(c.gamma, 1.33590, 1e-5);
  EXPECT_TRUE(c.origin);
  EXPECT_EQ(c.alpha, 0.0);
  EXPECT_EQ(c.beta, 0.0);
}

TEST(Uniform, AmplitudesAtOrigin) {
  const double r4 = std::pow(2.0, 0.25), r34 = std::pow(2.0, 0.75), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const auto c = uniform_coeffs(0, 0);
  EXPECT_NEAR(c.P[0], r4 * s3 / 6, 1e-10);
  EXPECT_NEAR(c.Q[0], s6 / 4, 1e-10);
  EXPECT_NEAR(c.R[0], 5 * r34 * s3 / 24, 1e-10);
  EXPECT_NEAR(c.P[1], r4 * s3 / 2, 1e-10);
  EXPECT_NEAR(c.Q[1], s6 / 4, 1e-10);
  EXPECT_NEAR(c.R[1], r34 * s3 / 8, 1e-10);
}

TEST(Uniform, MapDerivativesAtOrigin) {
  const auto d = multicritical_map_derivatives();
  EXPECT_NEAR(d[0], std::pow(2.0, 0.25) / 3, 1e-12);
  EXPECT_NEAR(d[1], std::sqrt(2.0) / 3, 1e-11);
  EXPECT_NEAR(d[2], std::pow(2.0, 0.75) / 6, 1e-10);
}

TEST(Uniform, TaylorCoefficientsAtOrigin) {
  const auto c = multicritical_taylor();
  EXPECT_NEAR(c[1], 0.0, 1e-14);
  EXPECT_NEAR(c[2], 0.0, 1e-12);
  EXPECT_NEAR(c[3], 0.0, 1e-11);
  EXPECT_GT(c[4], 0.0);
  // ¼u⁴ with u = z'(0)^{-1}(z − 1/3) to leading order
  EXPECT_NEAR(c[4], 0.25 / std::pow(std::pow(2.0, 0.25) / 3, 4), 1e-9);
}

TEST(Uniform, ReproducesSaddleValues) {
  for (auto [tau, delta] : {std::pair{0.01, 0.0}, {0.0, 0.01}, {-0.02, 0.005}, {0.003, -0.004}}) {
    const auto c = uniform_coeffs(tau, delta);
    const saddle::PhaseContext ctx(1.0 / 9.0 - delta, 1.0 / 3.0 - tau);
    for (int j = 0; j < 3; ++j) {
      const C u = c.u[static_cast<std::size_t>(j)];
      const C p = 0.25 * u * u * u * u - c.alpha * u * u - c.beta * u + c.gamma;
      const C f = saddle::f_eval(ctx, c.z[static_cast<std::size_t>(j)]);
      EXPECT_LT(std::abs(p - f), 1e-12) << tau << "," << delta;
      // u_j are the critical points of p
      EXPECT_LT(std::abs(u * u * u - 2.0 * c.alpha * u - c.beta), 1e-13);
    }
    EXPECT_LT(c.match_residual, 1e-12);
  }
}

TEST(Uniform, LeadingFormsAtSmallRadius) {
  for (int j = 0; j < 8; ++j) {
    const double th = j * std::numbers::pi / 4;
    const double tau = 1e-3 * std::cos(th), delta = 1e-3 * std::sin(th);
    const auto c = uniform_coeffs(tau, delta);
    EXPECT_NEAR(c.alpha / alpha_leading(tau, delta), 1.0, 0.05) << j;
    EXPECT_NEAR(c.beta / beta_leading(tau, delta), 1.0, 0.05) << j;
  }
}

TEST(Uniform, LeadingRatiosConvergeAlongRays) {
  for (double th : {0.3, 1.9, 4.0}) {
    double prev_a = 1.0, prev_b = 1.0;
    for (double r : {1e-2, 1e-3, 1e-4}) {
      const double tau = r * std::cos(th), delta = r * std::sin(th);
      const auto c = uniform_coeffs(tau, delta);
      const double ea = std::abs(c.alpha / alpha_leading(tau, delta) - 1.0);
      const double eb = std::abs(c.beta / beta_leading(tau, delta) - 1.0);
      EXPECT_LT(ea, prev_a);
      EXPECT_LT(eb, prev_b);
      prev_a = ea;
      prev_b = eb;
    }
  }
}

TEST(Uniform, BetaSlopeAlongAntiDiagonal) {
  // Along δ = −τ the slope of β is β₁,₀ − β₀,₁ = (15/2)·2^{1/4}.
  const double expect = 7.5 * std::pow(2.0, 0.25);
  const double s_hi = uniform_coeffs(1e-3, -1e-3).beta / 1e-3;
  const double s_lo = uniform_coeffs(1e-4, -1e-4).beta / 1e-4;
  EXPECT_NEAR(s_lo, expect, 0.01 * expect);
  EXPECT_LT(std::abs(s_lo - expect), std::abs(s_hi - expect));
}

TEST(Uniform, SignConventions) {
  EXPECT_GT(uniform_coeffs(1e-3, 0).beta, 0.0);
  EXPECT_LT(uniform_coeffs(0, 1e-3).beta, 0.0);
  EXPECT_GT(uniform_coeffs(0, 1e-3).alpha, 0.0);
}

TEST(Uniform, AmplitudesContinuousAtOrigin) {
  const auto o = uniform_coeffs(0, 0);
  const auto n = uniform_coeffs(1e-4, 1e-4);
  for (int k = 0; k < 2; ++k) {
    EXPECT_NEAR(n.P[k], o.P[k], 1e-3);
    EXPECT_NEAR(n.Q[k], o.Q[k], 1e-2);
  }
}

TEST(Uniform, DiskAndInputChecks) {
  EXPECT_THROW(uniform_coeffs(0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(uniform_coeffs(NAN, 0.0), std::invalid_argument);
  EXPECT_NO_THROW(uniform_coeffs(0.1, 0.0, 0.2));
}
