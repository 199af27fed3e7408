#include "ddp/uniform.hpp"

#include "ddp/error.hpp"
#include "ddp/roots.hpp"
#include "ddp/saddle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddp::airy {

namespace {

using C = std::complex<double>;

// Truncated power series c0 + c1 u + c2 u².
struct Series2 {
  double c0 = 0, c1 = 0, c2 = 0;
};
Series2 operator*(const Series2& a, const Series2& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}
Series2 inverse(const Series2& a) {
  const double i0 = 1.0 / a.c0;
  return {i0, -a.c1 * i0 * i0, (a.c1 * a.c1 - a.c0 * a.c2) * i0 * i0 * i0};
}
Series2 sqrt(const Series2& a) {
  const double s0 = std::sqrt(a.c0);
  const double s1 = a.c1 / (2.0 * s0);
  return {s0, s1, (a.c2 - s1 * s1) / (2.0 * s0)};
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

C p_value(double alpha, double beta, double gamma, C u) {
  const C u2 = u * u;
  return 0.25 * u2 * u2 - alpha * u2 - beta * u + gamma;
}

void origin_amplitudes(UniformCoeffs& uc) {
  const auto d = multicritical_map_derivatives();
  const double z1 = d[0], z2 = d[1] / 2.0, z3 = d[2] / 6.0;
  const double a = 1.0 / 9.0;
  const Series2 z{1.0 / 3.0, z1, z2};
  const Series2 dz{z1, 2.0 * z2, 3.0 * z3};
  const Series2 one_minus_z{1.0 - z.c0, -z.c1, -z.c2};
  const Series2 z_minus_a{z.c0 - a, z.c1, z.c2};
  const Series2 root_inv = inverse(sqrt(one_minus_z * z_minus_a));
  for (int k = 0; k < 2; ++k) {
    // g₀ z^{−k} dz/du with g₀ = z/√((1−z)(z−a))
    const Series2 G = (k == 0 ? z * root_inv : root_inv) * dz;
    uc.P[static_cast<std::size_t>(k)] = G.c0;
    uc.Q[static_cast<std::size_t>(k)] = G.c1;
    uc.R[static_cast<std::size_t>(k)] = G.c2;
  }
}

}  // namespace

double alpha_leading(double tau, double delta) { return 27.0 * std::sqrt(2.0) / 8.0 * (delta + tau * tau / 40.0); }

double beta_leading(double tau, double delta) { return 3.0 * std::pow(2.0, 0.25) * (tau - 1.5 * delta); }

std::array<double, 7> multicritical_taylor() {
  const saddle::PhaseContext ctx(1.0 / 9.0, 1.0 / 3.0);
  const C z0(1.0 / 3.0, 0.0);
  std::array<double, 7> c{};
  c[0] = saddle::f_eval(ctx, z0).real();
  for (int n = 1; n <= 6; ++n) c[static_cast<std::size_t>(n)] = saddle::f_derivative(ctx, z0, n).real() / factorial(n);
  return c;
}

std::array<double, 3> multicritical_map_derivatives() {
  // f − γ = c4 w⁴(1 + r1 w + r2 w² + …) = ¼u⁴, so u = (4c4)^{1/4} w (1 + h1 w + h2 w² + …)
  // with h1 = r1/4, h2 = r2/4 − 3r1²/32; reverted: w = κu − h1κ²u² + (2h1² − h2)κ³u³.
  const auto c = multicritical_taylor();
  const double r1 = c[5] / c[4], r2 = c[6] / c[4];
  const double h1 = r1 / 4.0, h2 = r2 / 4.0 - 3.0 * r1 * r1 / 32.0;
  const double kappa = std::pow(4.0 * c[4], -0.25);
  const double z1 = kappa, z2 = -h1 * kappa * kappa, z3 = (2.0 * h1 * h1 - h2) * kappa * kappa * kappa;
  return {z1, 2.0 * z2, 6.0 * z3};
}

UniformCoeffs uniform_coeffs(double tau, double delta, double disk_radius) {
  if (!std::isfinite(tau) || !std::isfinite(delta)) throw std::invalid_argument("uniform_coeffs: non-finite input");
  if (std::hypot(tau, delta) > disk_radius) throw std::invalid_argument("uniform_coeffs: (tau, delta) outside the disk");
  UniformCoeffs uc;
  uc.tau = tau;
  uc.delta = delta;

  if (tau == 0.0 && delta == 0.0) {
    uc.origin = true;
    uc.gamma = multicritical_taylor()[0];
    uc.z = {C(1.0 / 3.0), C(1.0 / 3.0), C(1.0 / 3.0)};
    origin_amplitudes(uc);
    return uc;
  }

  const double a = 1.0 / 9.0 - delta, t = 1.0 / 3.0 - tau;
  const saddle::PhaseContext ctx(a, t);
  const auto zs = solve_cubic(1.0, -1.0, t, -t * a);
  std::array<C, 3> fz;
  C fsum = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    fz[j] = saddle::f_eval(ctx, zs[j]);
    fsum += fz[j];
  }
  const C mean = fsum / 3.0;
  double S = 0.0, T = 0.0, dmax = 0.0;
  for (const auto& f : fz) {
    const C d = f - mean;
    S += (d * d).real();
    T += (d * d * d).real();
    dmax = std::max(dmax, std::abs(d));
  }
  S *= 3.0;
  T *= 4.5;

  // (27/8)x⁴ − (9/8)S x² − T x − S²/32 = 0, x = α²
  const auto xs = polynomial_roots({-S * S / 32.0, -T, -9.0 / 8.0 * S, 0.0, 27.0 / 8.0});
  const double match_tol = 1e-6 * dmax + 1e-13;

  struct Candidate {
    double alpha, beta, gamma, residual;
    std::array<C, 3> u;
  };
  std::vector<Candidate> accepted;
  for (const auto& xr : xs) {
    if (std::abs(xr.imag()) > 1e-8 * std::abs(xr) || !(xr.real() > 0.0)) continue;
    const double x = xr.real();
    for (double sa : {1.0, -1.0}) {
      const double alpha = sa * std::sqrt(x);
      double b2 = 2.0 * (S - 2.0 * x * x) / (27.0 * alpha);
      if (b2 < 0.0) {
        if (b2 > -1e-10 * std::abs(S / alpha)) b2 = 0.0;
        else continue;
      }
      for (double sb : {1.0, -1.0}) {
        Candidate c{alpha, sb * std::sqrt(b2), (fsum.real() + 2.0 * x) / 3.0, 0.0, {}};
        const auto us = solve_cubic(1.0, 0.0, -2.0 * alpha, -c.beta);
        // Pair u-saddles with z-saddles by matching critical values.
        std::array<int, 3> perm{0, 1, 2}, best{};
        double best_res = std::numeric_limits<double>::infinity();
        do {
          double res = 0.0;
          for (std::size_t j = 0; j < 3; ++j)
            res = std::max(res, std::abs(p_value(alpha, c.beta, c.gamma, us[static_cast<std::size_t>(perm[j])]) - fz[j]));
          if (res < best_res) {
            best_res = res;
            best = perm;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (best_res > match_tol) continue;
        for (std::size_t j = 0; j < 3; ++j) c.u[j] = us[static_cast<std::size_t>(best[j])];
        c.residual = best_res;
        // Orientation: z − 1/3 ≈ κu with κ > 0.
        double orient = 0.0;
        for (std::size_t j = 0; j < 3; ++j) orient += ((zs[j] - 1.0 / 3.0) * std::conj(c.u[j])).real();
        if (orient > 0.0) accepted.push_back(c);
      }
    }
  }
  if (accepted.empty()) throw ConvergenceError("uniform_coeffs: no (alpha, beta) branch reproduces the saddle values");
  for (std::size_t i = 1; i < accepted.size(); ++i) {
    const double sep = std::abs(accepted[i].alpha - accepted[0].alpha) + std::abs(accepted[i].beta - accepted[0].beta);
    if (sep > 1e-6 * (std::abs(accepted[0].alpha) + std::abs(accepted[0].beta)))
      throw ConvergenceError("uniform_coeffs: ambiguous (alpha, beta) branch");
  }
  const auto& c = accepted.front();
  uc.alpha = c.alpha;
  uc.beta = c.beta;
  uc.gamma = c.gamma;
  uc.u = c.u;
  uc.match_residual = c.residual;
  for (std::size_t j = 0; j < 3; ++j) uc.z[j] = zs[j];

  // P + u_j Q + u_j² R = g₀(z_j) z_j^{−k} (dz/du)(u_j), (dz/du)² = (3u_j² − 2α)/f''(z_j)
  Eigen::Matrix3cd V;
  std::array<C, 3> jac;
  for (int j = 0; j < 3; ++j) {
    const C u = uc.u[static_cast<std::size_t>(j)], z = uc.z[static_cast<std::size_t>(j)];
    V(j, 0) = 1.0;
    V(j, 1) = u;
    V(j, 2) = u * u;
    const C fpp = (1.0 / (1.0 - z) - 2.0 / z + 1.0 / (z - a)) / z;
    jac[static_cast<std::size_t>(j)] = std::sqrt((3.0 * u * u - 2.0 * uc.alpha) / fpp);
  }
  const auto lu = V.partialPivLu();
  for (int k = 0; k < 2; ++k) {
    Eigen::Vector3cd rhs;
    for (int j = 0; j < 3; ++j) {
      const C z = uc.z[static_cast<std::size_t>(j)];
      rhs(j) = saddle::g0(ctx, z) * std::pow(z, -k) * jac[static_cast<std::size_t>(j)];
    }
    const Eigen::Vector3cd pqr = lu.solve(rhs);
    uc.P[static_cast<std::size_t>(k)] = pqr(0).real();
    uc.Q[static_cast<std::size_t>(k)] = pqr(1).real();
    uc.R[static_cast<std::size_t>(k)] = pqr(2).real();
  }
  return uc;
}

}  // namespace ddp::airy
