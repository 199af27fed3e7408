#include "ddp/theta.hpp"

#include "ddp/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ddp::airy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kMaxDepth = 20;

template <class F>
auto integrate(F f, double lo, double hi, double tol) {
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  auto v = gauss_kronrod<double, 31>::integrate(f, lo, hi, kMaxDepth, tol, &err);
  return v;
}

void check_params(int k, std::span<const Complex> s, const ThetaOptions& opt) {
  if (k != 3 && k != 4) throw std::invalid_argument("theta: only k = 3 and k = 4 are supported");
  if (s.size() != static_cast<std::size_t>(k - 2))
    throw std::invalid_argument("theta: expected " + std::to_string(k - 2) + " parameters");
  for (const auto& x : s)
    if (!(std::abs(x) <= opt.s_cap)) throw std::invalid_argument("theta: |s_j| exceeds the cap");
}

// Smallest R past the maximum of b(r) where b fell by `drop`; ConvergenceError if above cap.
template <class B>
double truncation_radius(B b, double drop, double cap) {
  constexpr double dr = 1e-2;
  double bmax = b(0.0);
  for (double r = dr; r <= cap; r += dr) {
    const double v = b(r);
    bmax = std::max(bmax, v);
    if (v <= bmax - drop && r > 1.0) return r;
  }
  throw ConvergenceError("integrand tail bound not reached within the radius cap");
}

}  // namespace

double theta_radius(int k, std::span<const Complex> s, const ThetaOptions& opt) {
  check_params(k, s, opt);
  auto b = [&](double r) {
    double v = -std::pow(r, k) / k + 2.0 * std::log1p(r);  // log1p term covers the u^power factors
    double rj = r;
    for (const auto& sj : s) {
      v += std::abs(sj) * rj;
      rj *= r;
    }
    return v;
  };
  return truncation_radius(b, opt.tail_log_drop, opt.r_cap);
}

Complex theta(int k, std::span<const Complex> s, int power, const ThetaOptions& opt) {
  check_params(k, s, opt);
  if (power < 0 || power > k - 2) throw std::invalid_argument("theta: derivative index out of range");
  const double R = theta_radius(k, s, opt);
  auto ray = [&](Complex dir) {
    auto E = [&, dir](double r) -> Complex {
      const Complex u = r * dir;
      Complex expo = std::pow(u, k) / static_cast<double>(k);
      Complex uj = u;
      for (const auto& sj : s) {
        expo -= sj * uj;
        uj *= u;
      }
      Complex v = std::exp(expo);
      if (power > 0) v *= -std::pow(u, power);
      return v;
    };
    return dir * integrate(E, 0.0, R, opt.rel_tol);
  };
  const Complex ep = std::polar(1.0, kPi / k);
  return (ray(ep) - ray(std::conj(ep))) / Complex(0.0, 2.0 * kPi);
}

Theta4Partials theta4_partials(Complex s1, Complex s2, const ThetaOptions& opt) {
  const Complex s[2] = {s1, s2};
  Theta4Partials p;
  p.value = theta(4, s, 0, opt);
  p.d1 = theta(4, s, 1, opt);
  p.d2 = theta(4, s, 2, opt);
  const double R = theta_radius(4, s, opt);
  const Complex ep = std::polar(1.0, kPi / 4.0);
  double l1 = 0.0;
  for (Complex dir : {ep, std::conj(ep)}) {
    auto absE = [&, dir](double r) {
      const Complex u = r * dir;
      return std::abs(std::exp(std::pow(u, 4) / 4.0 - s1 * u - s2 * u * u));
    };
    l1 += integrate(absE, 0.0, R, 1e-8);
  }
  p.scale = l1 / (2.0 * kPi);
  return p;
}

Complex pearcey(double x, double y, double rel_tol) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("pearcey: non-finite argument");
  const double R = truncation_radius([&](double u) { return -u * u * u * u - y * u * u; }, 42.0, 100.0);
  const double v = integrate([&](double u) { return std::exp(-u * u * u * u - y * u * u) * std::cos(x * u); }, 0.0,
                             R, rel_tol);
  return 2.0 * std::polar(1.0, kPi / 8.0) * v;
}

Complex pearcey_from_theta4(double x, double y, const ThetaOptions& opt) {
  const Complex I(0.0, 1.0);
  const Complex a[2] = {(1.0 - I) * x / 2.0, I * y / 2.0};
  const Complex b[2] = {(1.0 + I) * x / 2.0, -I * y / 2.0};
  return std::sqrt(2.0) * kPi * std::polar(1.0, -kPi / 8.0) * (theta(4, a, 0, opt) + I * theta(4, b, 0, opt));
}

double pearcey_relation_residual(double x, double y) {
  return std::abs(pearcey(x, y) - pearcey_from_theta4(x, y));
}

double phi_scaling(double s1, double s2, double pole_guard, const ThetaOptions& opt) {
  const auto p = theta4_partials(s1, s2, opt);
  if (!(std::abs(p.value) > pole_guard * p.scale))
    throw ScalingPoleError("Theta_4 vanishes at (" + std::to_string(s1) + ", " + std::to_string(s2) +
                           "): scaling function pole");
  return (p.d1 / p.value).real();
}

}  // namespace ddp::airy
