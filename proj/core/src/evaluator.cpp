#include "ddp/evaluator.hpp"

#include "ddp/error.hpp"
#include "ddp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ddp::evaluator {

double ModelPoint::q() const { return std::exp(-epsilon); }

void ModelPoint::validate() const {
  if (!std::isfinite(w) || !std::isfinite(t) || !std::isfinite(epsilon))
    throw std::invalid_argument("model point must be finite");
  if (t < 0.0) throw std::invalid_argument("t must be nonnegative");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

std::int64_t tail_order(double t, double epsilon, double tail_cutoff) {
  if (t <= tail_cutoff) return 0;
  const double n = std::ceil(std::log(t / tail_cutoff) / epsilon);
  if (!(n < 4e18)) throw std::invalid_argument("tail order overflows for epsilon=" + std::to_string(epsilon));
  return static_cast<std::int64_t>(n);
}

double backward_pass(double w, double t, double epsilon, std::int64_t N, double pole_guard, double* g1,
                     double* g2) {
  constexpr std::int64_t kResync = 256;
  const double up = std::exp(epsilon);
  double gn1 = 1.0, gn2 = 1.0;  // G_{n+1}, G_{n+2}
  double x = 0.0;
  double s1 = 1.0, s2 = 1.0;
  for (std::int64_t n = N - 1; n >= 0; --n) {
    // x_n = t e^{−εn}; exact at multiples of kResync so runs with different N agree there.
    if (n == N - 1 || n % kResync == 0)
      x = t * std::exp(-epsilon * static_cast<double>(n));
    else
      x *= up;
    const double den = 1.0 - x * gn1 * (1.0 + w * gn2);
    if (!(std::abs(den) >= pole_guard)) throw PoleError(n, std::abs(den));
    const double g = 1.0 / den;
    gn2 = gn1;
    gn1 = g;
    if (n == 1) s1 = g;
    if (n == 2) s2 = g;
  }
  if (g1) *g1 = N >= 2 ? s1 : 1.0;
  if (g2) *g2 = N >= 3 ? s2 : 1.0;
  return gn1;
}

EvalResult eval_G_backward(const ModelPoint& p, const EvalOptions& opt) {
  p.validate();
  if (!(opt.tail_cutoff > 0.0 && opt.pole_guard > 0.0 && opt.stability_tol > 0.0))
    throw std::invalid_argument("evaluator tolerances must be positive");
  EvalResult r;
  r.N = tail_order(p.t, p.epsilon, opt.tail_cutoff);
  r.G = backward_pass(p.w, p.t, p.epsilon, r.N, opt.pole_guard, &r.G_q, &r.G_q2);
  if (opt.check_stability && r.N > 0) {
    const double g2N = backward_pass(p.w, p.t, p.epsilon, 2 * r.N, opt.pole_guard);
    r.stability_gap = std::abs(r.G - g2N);
    r.flagged = r.stability_gap > opt.stability_tol;
  }
  const double lhs = p.w * p.t * r.G_q2 * r.G_q * r.G + p.t * r.G_q * r.G - r.G + 1.0;
  r.residual = std::abs(lhs) / std::abs(r.G);
  return r;
}

CriticalPoint critical_point_q1(double w) {
  if (!std::isfinite(w)) throw std::invalid_argument("w must be finite");
  if (w == 0.0) return {0.25, 2.0};
  const double A = 2.0 * w, B = 1.0 - 3.0 * w, Cc = -2.0;
  double disc = B * B - 4.0 * A * Cc;
  if (disc < 0.0) {
    if (disc > -64.0 * std::numeric_limits<double>::epsilon()) disc = 0.0;
    else throw std::domain_error("no real critical point of the q=1 cubic for w=" + std::to_string(w));
  }
  const double qq = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  double best = std::numeric_limits<double>::infinity();
  for (double G : {qq / A, Cc / qq})
    if (G >= 1.0 && G < best) best = G;
  if (!std::isfinite(best)) throw std::domain_error("no physical critical point for w=" + std::to_string(w));
  return {1.0 / (3.0 * w * best * best + 2.0 * best), best};
}

CubicSolution eval_G_q1_cubic(double w, double t, int continuation_steps) {
  if (!std::isfinite(w) || !std::isfinite(t)) throw std::invalid_argument("w, t must be finite");
  if (continuation_steps < 1) throw std::invalid_argument("continuation_steps must be positive");
  CubicSolution sol;
  if (t == 0.0) {
    sol.G = 1.0;
    sol.roots[0] = 1.0;
    sol.root_count = 1;
    return sol;
  }

  auto solve_at = [&](double tt, CubicSolution& s) {
    if (w == 0.0) {
      // t G² − G + 1 = 0
      const auto r = polynomial_roots({1.0, -1.0, tt});
      s.root_count = static_cast<int>(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) s.roots[i] = r[i];
    } else {
      s.roots = solve_cubic(w * tt, tt, -1.0, 1.0);
      s.root_count = 3;
    }
  };

  // Exactly at the branch end the physical root is the double root.
  bool at_critical = false;
  CriticalPoint cp{};
  try {
    cp = critical_point_q1(w);
    at_critical = std::abs(t - cp.t_c) <= 1e-13 * std::max(1.0, std::abs(cp.t_c));
  } catch (const std::domain_error&) {
  }

  // Adaptive continuation: a step is accepted only when the nearest root is
  // clearly separated from the runner-up, so the branch cannot hop near t_c.
  double G = 1.0, tt = 0.0;
  double h = t / continuation_steps;
  while (tt != t) {
    const double tn = (std::abs(t - tt) <= std::abs(h)) ? t : tt + h;
    solve_at(tn, sol);
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    std::complex<double> z;
    for (int i = 0; i < sol.root_count; ++i) {
      const auto r = sol.roots[static_cast<std::size_t>(i)];
      const double d = std::abs(r - G);
      if (d < d1) {
        d2 = d1;
        d1 = d;
        z = r;
      } else if (d < d2) {
        d2 = d;
      }
    }
    const bool final_step = tn == t;
    if (final_step && at_critical) {
      G = cp.G_c;
      break;
    }
    if (d1 > 0.25 * d2 && std::abs(h) > 1e-15 * std::abs(t)) {
      h *= 0.5;
      continue;
    }
    if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z.real())))
      throw ConvergenceError("physical branch of the q=1 cubic is not real at t=" + std::to_string(tn) +
                             " (beyond the branch point)");
    G = z.real();
    tt = tn;
    h *= 1.5;
  }
  sol.G = G;
  return sol;
}

}  // namespace ddp::evaluator
