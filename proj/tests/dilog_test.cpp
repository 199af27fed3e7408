#include "ddp/dilog.hpp"
#include "ddp/verification/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using ddp::dilog;
using C = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST(Dilog, SpecialValues) {
  EXPECT_NEAR(dilog(0.0), 0.0, 0.0);
  EXPECT_NEAR(dilog(1.0), pi * pi / 6, 1e-15);
  EXPECT_NEAR(dilog(-1.0), -pi * pi / 12, 1e-15);
  EXPECT_NEAR(dilog(0.5), pi * pi / 12 - 0.5 * std::log(2.0) * std::log(2.0), 1e-15);
}

TEST(Dilog, OnTheCutAboveOne) {
  const C v = dilog(C(2.0, 0.0));
  EXPECT_NEAR(v.real(), pi * pi / 4, 1e-14);
  EXPECT_NEAR(v.imag(), -pi * std::log(2.0), 1e-14);
  // A negative-zero imaginary part is treated as +0.
  EXPECT_EQ(dilog(C(2.0, -0.0)), v);
}

TEST(Dilog, AgreesWithPlainSeriesInsideDisk) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> r(0.0, 0.9), th(-pi, pi);
  for (int i = 0; i < 200; ++i) {
    const C z = std::polar(r(rng), th(rng));
    EXPECT_LT(std::abs(dilog(z) - ddp::oracle::dilog_series(z)), 2e-15) << z;
  }
  EXPECT_NEAR(dilog(1.0 / 3.0), 0.36621322997706348, 1e-16);
}

TEST(Dilog, ReflectionIdentity) {
  // Li₂(z) + Li₂(1−z) = π²/6 − ln z ln(1−z), off the real axis
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const C z(u(rng), u(rng));
    if (std::abs(z.imag()) < 1e-3) continue;
    const C lhs = dilog(z) + dilog(1.0 - z);
    const C rhs = pi * pi / 6 - std::log(z) * std::log(1.0 - z);
    EXPECT_LT(std::abs(lhs - rhs), 1e-13 * std::max(1.0, std::abs(rhs))) << z;
  }
}

TEST(Dilog, InversionIdentity) {
  // Li₂(z) + Li₂(1/z) = −π²/6 − ½ ln²(−z), z ∉ [0, ∞)
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 200; ++i) {
    const C z(u(rng), u(rng));
    if (std::abs(z.imag()) < 1e-3) continue;
    const C l = std::log(-z);
    const C lhs = dilog(z) + dilog(1.0 / z);
    EXPECT_LT(std::abs(lhs - (-pi * pi / 6 - 0.5 * l * l)), 1e-13 * std::max(1.0, std::abs(lhs))) << z;
  }
}

TEST(Dilog, ConjugationSymmetry) {
  for (const C z : {C(0.3, 0.7), C(-2, 1), C(1.5, 0.2), C(0.9, -0.4)})
    EXPECT_LT(std::abs(dilog(std::conj(z)) - std::conj(dilog(z))), 1e-15);
}

TEST(Dilog, DerivativeIsMinusLogOverZ) {
  const C z(0.4, 0.6);
  const double h = 1e-5;
  const C fd = (dilog(z + h) - dilog(z - h)) / (2 * h);
  EXPECT_LT(std::abs(fd + std::log(1.0 - z) / z), 1e-9);
}

TEST(Dilog, RealOverloadDomain) { EXPECT_THROW(dilog(1.5), std::domain_error); }

TEST(LogCut, NegativeRealAxis) {
  EXPECT_NEAR(ddp::log_cut(C(-2.0, -0.0)).imag(), pi, 0.0);
  EXPECT_NEAR(ddp::log_cut(C(-2.0, 0.0)).imag(), pi, 0.0);
  EXPECT_NEAR(ddp::log_cut(C(-2.0, -1e-300)).imag(), -pi, 1e-15);
}
