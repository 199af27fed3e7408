#include "ddp/saddle.hpp"

#include "ddp/dilog.hpp"
#include "ddp/error.hpp"
#include "ddp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ddp::saddle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCoalescence = 1e-3;  // saddles closer than this are treated as one cluster

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_domain(const PhaseContext& ctx, Complex z) {
  if (z == Complex(0.0, 0.0)) throw std::domain_error("phase function is singular at z = 0");
  if (ctx.policy == CutPolicy::Strict && ctx.on_cut(z))
    throw BranchCutError("z = (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                         ") lies on a branch cut of f");
}

// L(z) = ln t − ln(1−z) − ln z + ln(1 − a/z); f' = L/z.
Complex L0(const PhaseContext& ctx, Complex z) {
  return std::log(ctx.t) - log_cut(1.0 - z) - log_cut(z) + log_cut(1.0 - ctx.a / z);
}

// L^{(j)}(z), j ≥ 1
Complex Lj(const PhaseContext& ctx, Complex z, int j) {
  const double fj = factorial(j - 1);
  const double sgn = (j - 1) % 2 == 0 ? 1.0 : -1.0;
  return fj / std::pow(1.0 - z, j) - 2.0 * sgn * fj / std::pow(z, j) + sgn * fj / std::pow(z - ctx.a, j);
}

}  // namespace

PhaseContext::PhaseContext(double a_, double t_, CutPolicy p) : a(a_), t(t_), policy(p) {
  if (!std::isfinite(a) || !std::isfinite(t)) throw std::invalid_argument("a and t must be finite");
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
}

bool PhaseContext::on_cut(Complex z) const {
  if (z.imag() != 0.0) return false;
  const double x = z.real();
  return x <= 0.0 || x > 1.0 || (a > 0.0 && x < a);
}

Complex f_eval(const PhaseContext& ctx, Complex z) {
  check_domain(ctx, z);
  const Complex lz = log_cut(z);
  return std::log(ctx.t) * lz + dilog(z) - 0.5 * lz * lz + dilog(ctx.a / z);
}

Complex f_prime(const PhaseContext& ctx, Complex z) {
  check_domain(ctx, z);
  return L0(ctx, z) / z;
}

Complex f_derivative(const PhaseContext& ctx, Complex z, int n) {
  if (n < 1) throw std::invalid_argument("derivative order must be at least 1");
  if (n == 1) return f_prime(ctx, z);
  check_domain(ctx, z);
  // f^{(n)} = Σ_j C(n−1, j) L^{(j)} (1/z)^{(n−1−j)}, (1/z)^{(m)} = (−1)^m m!/z^{m+1}
  Complex sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= n - 1; ++j) {
    const int m = n - 1 - j;
    const Complex lj = j == 0 ? L0(ctx, z) : Lj(ctx, z, j);
    const Complex inv = (m % 2 == 0 ? 1.0 : -1.0) * factorial(m) / std::pow(z, m + 1);
    sum += binom * lj * inv;
    binom = binom * (n - 1 - j) / (j + 1);
  }
  return sum;
}

Complex g0(const PhaseContext& ctx, Complex z) {
  return z / std::sqrt((1.0 - z) * (z - ctx.a));
}

std::string to_string(SaddleCase c) {
  switch (c) {
    case SaddleCase::i: return "i";
    case SaddleCase::ii: return "ii";
    case SaddleCase::iii_below: return "iii_below";
    case SaddleCase::iii_between: return "iii_between";
    case SaddleCase::iii_above: return "iii_above";
    case SaddleCase::iv: return "iv";
    case SaddleCase::v: return "v";
  }
  return "?";
}

namespace {
std::optional<double> disc_root(double a) {
  const double d = 9.0 * a * a - 10.0 * a + 1.0;
  if (d < 0.0) {
    if (d > -1e-15) return 0.0;
    return std::nullopt;
  }
  return std::sqrt(d);
}
}  // namespace

std::optional<double> t_c_minus(double a) {
  const auto r = disc_root(a);
  if (!r) return std::nullopt;
  return (1.0 + 18.0 * a - 27.0 * a * a - (1.0 - 9.0 * a) * *r) / 8.0;
}

std::optional<double> t_c_plus(double a) {
  const auto r = disc_root(a);
  if (!r) return std::nullopt;
  return (1.0 + 18.0 * a - 27.0 * a * a + (1.0 - 9.0 * a) * *r) / 8.0;
}

std::optional<double> z_c_minus(double a) {
  const auto r = disc_root(a);
  if (!r) return std::nullopt;
  return (3.0 * a + 1.0 - *r) / 4.0;
}

std::optional<double> z_c_plus(double a) {
  const auto r = disc_root(a);
  if (!r) return std::nullopt;
  return (3.0 * a + 1.0 + *r) / 4.0;
}

SaddleSet saddles(const PhaseContext& ctx, double a_max) {
  const double a = ctx.a, t = ctx.t;
  if (a > a_max) throw std::invalid_argument("a exceeds a_max");
  SaddleSet s;
  const auto r = solve_cubic(1.0, -1.0, t, -t * a);
  int nreal = 0;
  for (const auto& z : r) nreal += z.imag() == 0.0;
  if (nreal == 3) {
    s.z = r;  // ascending
  } else {
    // r = {real, Im>0, Im<0}
    const Complex real = r[0], up = r[1].imag() > 0.0 ? r[1] : r[2];
    if (real.real() > up.real())
      s.z = {up, std::conj(up), real};
    else
      s.z = {real, std::conj(up), up};
  }

  constexpr double kTriple = 1e-14;
  if (a <= 1.0 / 9.0 + kTriple) {
    s.t_c_minus = t_c_minus(a);
    s.t_c_plus = t_c_plus(a);
    s.z_c_minus = z_c_minus(a);
    s.z_c_plus = z_c_plus(a);
  }
  if (std::abs(a - 1.0 / 9.0) <= kTriple) s.case_tag = SaddleCase::iv;
  else if (a > 1.0 / 9.0) s.case_tag = SaddleCase::v;
  else if (a < 0.0) s.case_tag = SaddleCase::i;
  else if (a == 0.0) s.case_tag = SaddleCase::ii;
  else if (t < *s.t_c_minus) s.case_tag = SaddleCase::iii_below;
  else if (t > *s.t_c_plus) s.case_tag = SaddleCase::iii_above;
  else s.case_tag = SaddleCase::iii_between;

  const auto& z = s.z;
  s.symmetric_residuals = {std::abs(z[0] + z[1] + z[2] - 1.0),
                           std::abs(z[0] * z[1] + z[0] * z[2] + z[1] * z[2] - t),
                           std::abs(z[0] * z[1] * z[2] - t * a)};
  return s;
}

// ---- descent tracing --------------------------------------------------------

std::vector<double> takeoff_angles(const PhaseContext& ctx, Complex z_s, int* order) {
  // Order from the number of saddles clustered at z_s: two → cubic local form, three → quartic.
  const auto r = solve_cubic(1.0, -1.0, ctx.t, -ctx.t * ctx.a);
  int cluster = 0;
  for (const auto& z : r) cluster += std::abs(z - z_s) < kCoalescence;
  const int n = std::clamp(cluster + 1, 2, 4);
  const Complex fn = f_derivative(ctx, z_s, n);
  if (std::abs(fn) == 0.0) throw ConvergenceError("take-off direction undefined: f^(n) vanishes");
  std::vector<double> angles;
  for (int k = 0; k < n; ++k) angles.push_back((kPi - std::arg(fn)) / n + 2.0 * kPi * k / n);
  if (order) *order = n;
  return angles;
}

DescentPath trace_descent(const PhaseContext& ctx, Complex z_s, Direction dir, const TraceOptions& opt) {
  DescentPath path;
  const auto angles = takeoff_angles(ctx, z_s, &path.takeoff_order);
  double theta = angles.front();
  auto better = [&](double cand, double cur) {
    const double sc = dir == Direction::Upper ? std::sin(cand) : -std::sin(cand);
    const double s0 = dir == Direction::Upper ? std::sin(cur) : -std::sin(cur);
    if (std::abs(sc - s0) > 1e-9) return sc > s0;
    return std::cos(cand) > std::cos(cur);
  };
  for (double th : angles)
    if (better(th, theta)) theta = th;

  const Complex f_s = f_eval(ctx, z_s);
  const double target = f_s.imag();
  path.points.push_back(z_s);
  path.f_values.push_back(f_s);

  const double fscale = std::max(1.0, std::abs(f_s));
  auto correct = [&](Complex zp, Complex normal, Complex& out, Complex& fout) -> bool {
    Complex z = zp;
    for (int it = 0; it < 40; ++it) {
      const Complex fz = f_eval(ctx, z);
      const double g = fz.imag() - target;
      if (std::abs(g) <= opt.corrector_tol * std::max(fscale, std::abs(fz))) {
        out = z;
        fout = fz;
        return true;
      }
      const double dg = (f_prime(ctx, z) * normal).imag();
      if (dg == 0.0 || !std::isfinite(dg)) return false;
      z -= (g / dg) * normal;
      if (std::abs(z - zp) > 0.5 * std::abs(zp)) return false;
    }
    return false;
  };

  // First step off the saddle along the local model direction.
  Complex z;
  Complex fz;
  {
    double h0 = 1e-3;
    for (const auto& zz : solve_cubic(1.0, -1.0, ctx.t, -ctx.t * ctx.a)) {
      const double d = std::abs(zz - z_s);
      if (d >= kCoalescence) h0 = std::min(h0, 0.1 * d);
    }
    h0 = std::min(h0, 0.01 * std::abs(z_s));
    const Complex dirv = std::polar(1.0, theta);
    if (!correct(z_s + h0 * dirv, Complex(0.0, 1.0) * dirv, z, fz))
      throw PathLostError("corrector failed on the first step off the saddle", z_s);
  }
  path.points.push_back(z);
  path.f_values.push_back(fz);

  auto descent_dir = [&](Complex zz) {
    const Complex fp = f_prime(ctx, zz);
    return -std::conj(fp) / std::abs(fp);
  };

  path.end_reason = "max_steps";
  for (int step = 0; step < opt.max_steps; ++step) {
    const double rz = std::abs(z);
    if (rz >= opt.radius_cap) {
      path.end_reason = "radius";
      break;
    }
    if (rz <= opt.near_zero) {
      path.end_reason = "origin";
      break;
    }
    const Complex fp = f_prime(ctx, z);
    const Complex f2 = f_derivative(ctx, z, 2);
    double h = std::abs(f2) > 0.0 ? 0.2 * std::abs(fp / f2) : opt.step_fraction * rz;
    const double h_floor = opt.h_min * std::min(1.0, rz);
    h = std::max(std::min(h, opt.step_fraction * rz), h_floor);

    Complex znew, fnew;
    bool ok = false;
    while (!ok) {
      const Complex k1 = descent_dir(z);
      const Complex k2 = descent_dir(z + 0.5 * h * k1);
      const Complex zp = z + h * k2;
      ok = correct(zp, Complex(0.0, 1.0) * k2, znew, fnew);
      if (!ok) {
        if (h <= h_floor) throw PathLostError("corrector lost the level curve", z);
        h = std::max(0.5 * h, h_floor);
      }
    }
    if (!(fnew.real() < fz.real())) path.monotone = false;
    z = znew;
    fz = fnew;
    path.points.push_back(z);
    path.f_values.push_back(fz);
  }

  for (const auto& f : path.f_values) path.im_f_drift = std::max(path.im_f_drift, std::abs(f.imag() - target));
  path.terminal_arg = std::arg(path.points.back());
  return path;
}

double r1_bound(Complex z) {
  const double phi = std::arg(z);
  if (phi == 0.0 || z.imag() == 0.0) throw std::domain_error("r1_bound requires z off the real axis");
  const double psi = phi > 0.0 ? phi - kPi / 2.0 : phi + kPi / 2.0;
  const double s = std::sin(phi);
  return (std::atan((std::abs(z) - std::cos(phi)) / s) - psi) / (6.0 * s);
}

}  // namespace ddp::saddle
