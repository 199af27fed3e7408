#include "ddp/verification/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ddp::oracle {

double airy_ai_series(double x) {
  // Ai(x) = c1 f(x) − c2 g(x),
  // f = Σ 3^k (1/3)_k x^{3k}/(3k)!,  g = Σ 3^k (2/3)_k x^{3k+1}/(3k+1)!
  const long double c1 = 1.0L / (std::cbrt(9.0L) * std::tgamma(2.0L / 3.0L));
  const long double c2 = 1.0L / (std::cbrt(3.0L) * std::tgamma(1.0L / 3.0L));
  const long double x3 = static_cast<long double>(x) * x * x;
  long double tf = 1.0L, tg = x, f = tf, g = tg;
  for (int k = 1; k < 200; ++k) {
    tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    f += tf;
    g += tg;
    if (std::fabs(tf) < 1e-22L * std::fabs(f) && std::fabs(tg) < 1e-22L * (std::fabs(g) + 1e-300L)) break;
  }
  return static_cast<double>(c1 * f - c2 * g);
}

std::complex<double> dilog_series(std::complex<double> z) {
  if (std::abs(z) > 0.9) throw std::invalid_argument("dilog_series: |z| must be at most 0.9");
  std::complex<long double> zl(z.real(), z.imag()), p = zl, s = 0.0L;
  for (int k = 1; k < 2000; ++k) {
    const auto term = p / (static_cast<long double>(k) * k);
    s += term;
    if (std::abs(term) < 1e-22L) break;
    p *= zl;
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::complex<double> central_difference(const std::function<std::complex<double>(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double theta4_origin() {
  // Both rays carry ∫₀^∞ e^{−r⁴/4} dr = 4^{1/4}Γ(5/4); the phases combine to 2i sin(π/4).
  return std::sin(std::numbers::pi / 4.0) * std::pow(4.0, 0.25) * std::tgamma(1.25) / std::numbers::pi;
}

}  // namespace ddp::oracle
