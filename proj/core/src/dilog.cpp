#include "ddp/dilog.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ddp {

namespace {

using C = std::complex<double>;
constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;
constexpr int kTerms = 24;

// B_{2k}/(2k+1)!
const std::array<double, kTerms>& bernoulli_coeffs() {
  static const std::array<double, kTerms> c = [] {
    std::array<double, kTerms> a{};
    for (int k = 1; k <= kTerms; ++k)
      a[static_cast<std::size_t>(k - 1)] =
          boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(static_cast<unsigned>(2 * k + 1));
    return a;
  }();
  return c;
}

C canon(C z) { return {z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}; }

// |z| ≤ 1, Re z ≤ 1/2: Li₂ = Σ_{n≥0} B_n u^{n+1}/(n+1)!, u = −ln(1−z).
C dilog_core(C z) {
  const C u = -std::log(1.0 - z);
  const C u2 = u * u;
  const auto& b = bernoulli_coeffs();
  C sum = 0.0, p = u * u2;
  for (int k = 0; k < kTerms; ++k) {
    const C term = b[static_cast<std::size_t>(k)] * p;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    p *= u2;
  }
  return u - 0.25 * u2 + sum;
}

C dilog_unit_disk(C z) {
  if (z.real() > 0.5) {
    if (z == C(1.0, 0.0)) return kPi2Over6;
    // Li₂(z) + Li₂(1−z) = π²/6 − ln z ln(1−z)
    return kPi2Over6 - std::log(z) * std::log(1.0 - z) - dilog_core(1.0 - z);
  }
  return dilog_core(z);
}

}  // namespace

C log_cut(C z) {
  z = canon(z);
  return std::log(z);
}

C dilog(C z) {
  z = canon(z);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("dilog: non-finite argument");
  if (z == C(0.0, 0.0)) return 0.0;
  if (z.imag() == 0.0 && z.real() > 1.0) {
    const double x = z.real(), lx = std::log(x);
    return {2.0 * kPi2Over6 - 0.5 * lx * lx - dilog_unit_disk(1.0 / x).real(), -std::numbers::pi * lx};
  }
  if (std::abs(z) > 1.0) {
    // Li₂(z) = −π²/6 − ½ ln²(−z) − Li₂(1/z), z ∉ [1, ∞)
    const C l = std::log(-z);
    return -kPi2Over6 - 0.5 * l * l - dilog_unit_disk(1.0 / z);
  }
  return dilog_unit_disk(z);
}

double dilog(double x) {
  if (x > 1.0) throw std::domain_error("real dilog requires x <= 1");
  return dilog(C(x, 0.0)).real();
}

}  // namespace ddp
