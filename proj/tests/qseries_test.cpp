#include "ddp/error.hpp"
#include "ddp/qseries.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ddp;
using namespace ddp::qseries;
using C = std::complex<double>;

namespace {

// Σ_n (a;q)_n/(q;q)_n (−t)^n q^{n²−n} with each term built from scratch.
C phi_naive(C a, C t, C q, int terms) {
  C s = 0;
  for (int n = 0; n < terms; ++n)
    s += qpochhammer(a, q, static_cast<std::size_t>(n)) / qpochhammer(q, q, static_cast<std::size_t>(n)) *
         std::pow(-t, n) * std::pow(q, n * n - n);
  return s;
}

}  // namespace

TEST(QPochhammer, FiniteProducts) {
  const C z(0.3, 0.1), q(0.5, 0.0);
  EXPECT_EQ(qpochhammer(z, q, 0), C(1.0));
  const C expect = (1.0 - z) * (1.0 - z * q) * (1.0 - z * q * q);
  EXPECT_LT(std::abs(qpochhammer(z, q, 3) - expect), 1e-15);
}

TEST(QPochhammer, InfiniteProductEulerPentagonal) {
  // (q;q)_∞ = Σ_k (−1)^k q^{k(3k−1)/2}, k ∈ Z
  const double q = 0.6;
  double s = 0;
  for (int k = -40; k <= 40; ++k) s += (k % 2 ? -1.0 : 1.0) * std::pow(q, k * (3 * k - 1) / 2.0);
  EXPECT_NEAR(qpochhammer_inf(C(q), C(q)).real(), s, 1e-14);
}

TEST(QPochhammer, LogAFactorMatchesProduct) {
  for (double a : {0.0, 1.0 / 9.0, 0.5})
    for (double q : {0.3, 0.9, 0.99}) {
      const double direct = std::log(A_factor(C(a), C(q)).real());
      EXPECT_NEAR(log_A_factor(a, q), direct, 1e-12 * std::max(1.0, std::abs(direct))) << a << " " << q;
    }
}

TEST(Phi, MatchesNaiveSum) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-0.5, 0.5), uq(0.1, 0.8);
  for (int i = 0; i < 20; ++i) {
    const C a(u(rng), u(rng)), t(u(rng), u(rng)), q(uq(rng), 0.0);
    for (unsigned shift : {0u, 1u}) {
      const C expect = phi_naive(a, t * std::pow(q, static_cast<int>(shift)), q, 60);
      EXPECT_LT(std::abs(phi(a, t, q, shift).value - expect), 1e-14 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST(Phi, ZeroArgumentIsOne) {
  const auto r = phi(C(0.3), C(0.0), C(0.5));
  EXPECT_EQ(r.value, C(1.0));
}

TEST(Phi, RejectsUnitCircle) { EXPECT_THROW(phi(C(0.1), C(0.1), C(1.0)), ConvergenceError); }

TEST(Phi, TermCapIsReported) {
  PhiOptions opt;
  opt.max_terms = 3;
  EXPECT_THROW(phi(C(0.1), C(0.3), C(0.95), 0, opt), ConvergenceError);
}

TEST(Phi, ExtendedPrecisionAgreesWithDouble) {
  using F = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;
  const auto hi = phi_series<F, F>(F(1) / 9, F(1) / 3, F("0.8"), 1, F("1e-45"), 100000);
  const auto lo = phi(C(1.0 / 9.0), C(1.0 / 3.0), C(0.8), 1);
  EXPECT_NEAR(static_cast<double>(hi.value), lo.value.real(), 1e-14);
}

TEST(QBinomial, SmallValues) {
  EXPECT_EQ(qbinomial(4, 2), QPoly({1, 1, 2, 1, 1}));
  EXPECT_EQ(qbinomial(5, 0), QPoly({1}));
  EXPECT_EQ(qbinomial(5, 5), QPoly({1}));
  EXPECT_TRUE(qbinomial(3, 4).is_zero());
}

TEST(QBinomial, PascalRule) {
  // [n,k] = [n−1,k−1] + q^k [n−1,k]
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k < n; ++k)
      EXPECT_EQ(qbinomial(n, k), qbinomial(n - 1, k - 1) + qbinomial(n - 1, k).shifted(k));
}

TEST(QFibonacci, RecurrenceEqualsExplicit) {
  for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(qfibonacci(k), qfibonacci_explicit(k)) << k;
}

TEST(QFibonacci, FibonacciNumbersAtOne) {
  long a = 1, b = 1;  // F_0(1,1) = F_1(1,1) = 1
  for (std::size_t k = 0; k <= 40; ++k) {
    EXPECT_EQ(qfibonacci_at_q1(k, Rational(1)), Rational(a)) << k;
    const long c = a + b;
    a = b;
    b = c;
  }
}

TEST(QFibonacci, NonNegativeAboveMinusQuarter) {
  for (int i = 0; i < 100; ++i) {
    const Rational s = Rational(-1, 4) + Rational(17 * i, 4 * 99);
    for (std::size_t k = 0; k <= 30; ++k) EXPECT_GE(qfibonacci_at_q1(k, s), 0) << "k=" << k << " i=" << i;
  }
}

TEST(QFibonacci, ChangesSignBelowMinusQuarter) {
  bool negative = false;
  for (std::size_t k = 0; k <= 30; ++k) negative |= qfibonacci_at_q1(k, Rational(-3, 10)) < 0;
  EXPECT_TRUE(negative);
}

TEST(PhiRatioSeries, FirstOrders) {
  const auto s = phi_ratio_series(2);
  EXPECT_EQ(s[0], BiPoly::constant(1));
  EXPECT_EQ(s[1].row(0), QPoly({1}));
  EXPECT_EQ(s[1].row(1), QPoly({1}));
  EXPECT_EQ(s[2].row(1), QPoly({2, 2, 1}));
}
