#include "ddp/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ddp {

namespace {

using C = std::complex<double>;

C polish(const std::vector<double>& p, C z) {
  std::vector<double> dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(static_cast<double>(i) * p[i]);
  const C f = horner(p, z);
  const C df = horner(dp, z);
  if (std::abs(df) == 0.0) return z;
  const C zn = z - f / df;
  if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag())) return z;
  return std::abs(horner(p, zn)) < std::abs(f) ? zn : z;
}

void order_roots(std::vector<C>& r) {
  std::stable_sort(r.begin(), r.end(), [](const C& x, const C& y) {
    const bool rx = x.imag() == 0.0, ry = y.imag() == 0.0;
    if (rx != ry) return rx;
    if (rx) return x.real() < y.real();
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() > y.imag();
  });
}

}  // namespace

std::array<C, 3> solve_cubic(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0) throw std::invalid_argument("solve_cubic: leading coefficient is zero");
  const double b = c2 / c3, c = c1 / c3, d = c0 / c3;
  // z = y − b/3: y³ + p y + r = 0
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double r = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double disc = 0.25 * r * r + p * p * p / 27.0;

  std::vector<C> roots;
  if (disc <= 0.0 && p < 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * r / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.emplace_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift, 0.0);
  } else {
    const double sq = std::sqrt(std::max(disc, 0.0));
    // Pick the sign that avoids cancellation.
    const double A = -std::copysign(std::cbrt(std::abs(r) / 2.0 + sq), r);
    const double B = A != 0.0 ? -p / (3.0 * A) : 0.0;
    const double re = -(A + B) / 2.0 - shift;
    const double im = std::sqrt(3.0) / 2.0 * (A - B);
    roots.emplace_back(A + B - shift, 0.0);
    if (im == 0.0) {
      roots.emplace_back(re, 0.0);
      roots.emplace_back(re, 0.0);
    } else {
      roots.emplace_back(re, std::abs(im));
      roots.emplace_back(re, -std::abs(im));
    }
  }

  const std::vector<double> poly{c0, c1, c2, c3};
  for (auto& z : roots) {
    const bool real = z.imag() == 0.0;
    z = polish(poly, z);
    if (real) z = C(polish(poly, C(z.real(), 0.0)).real(), 0.0);
  }
  // Keep the complex pair exactly conjugate.
  if (roots[1].imag() != 0.0) roots[2] = std::conj(roots[1]);
  order_roots(roots);
  return {roots[0], roots[1], roots[2]};
}

std::vector<C> polynomial_roots(const std::vector<double>& ascending) {
  std::vector<double> p = ascending;
  while (!p.empty() && p.back() == 0.0) p.pop_back();
  if (p.size() <= 1) return {};
  std::vector<C> out;
  // Roots at zero.
  std::size_t lead_zero = 0;
  while (lead_zero < p.size() && p[lead_zero] == 0.0) ++lead_zero;
  for (std::size_t i = 0; i < lead_zero; ++i) out.emplace_back(0.0, 0.0);
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead_zero));
  const std::size_t deg = p.size() - 1;

  if (deg == 1) {
    out.emplace_back(-p[0] / p[1], 0.0);
  } else if (deg == 2) {
    const double disc = p[1] * p[1] - 4.0 * p[2] * p[0];
    if (disc >= 0.0) {
      const double qq = -0.5 * (p[1] + std::copysign(std::sqrt(disc), p[1]));
      out.emplace_back(qq / p[2], 0.0);
      out.emplace_back(qq != 0.0 ? p[0] / qq : 0.0, 0.0);
    } else {
      const double re = -p[1] / (2.0 * p[2]), im = std::sqrt(-disc) / (2.0 * std::abs(p[2]));
      out.emplace_back(re, im);
      out.emplace_back(re, -im);
    }
  } else if (deg == 3) {
    const auto r = solve_cubic(p[3], p[2], p[1], p[0]);
    out.insert(out.end(), r.begin(), r.end());
  } else if (deg >= 4) {
    const int n = static_cast<int>(deg);
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p[static_cast<std::size_t>(i)] / p[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("polynomial_roots: eigenvalue solver failed");
    for (int i = 0; i < n; ++i) {
      C z = es.eigenvalues()[i];
      for (int it = 0; it < 3; ++it) z = polish(p, z);
      if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z.real())) && es.eigenvalues()[i].imag() == 0.0)
        z = C(z.real(), 0.0);
      out.push_back(z);
    }
  }
  order_roots(out);
  return out;
}

}  // namespace ddp
