#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace ddp::evaluator {

// (w, t, q = e^{−ε}); a = −w, δ = 1/9 − a, τ = 1/3 − t.
struct ModelPoint {
  double w = 0.0;
  double t = 0.0;
  double epsilon = 0.0;

  double a() const noexcept { return -w; }
  double delta() const noexcept { return 1.0 / 9.0 + w; }
  double tau() const noexcept { return 1.0 / 3.0 - t; }
  double q() const;

  static ModelPoint from_natural(double delta, double tau, double epsilon) {
    return {delta - 1.0 / 9.0, 1.0 / 3.0 - tau, epsilon};
  }
  // Throws std::invalid_argument unless t ≥ 0 and ε > 0 are finite.
  void validate() const;
};

struct EvalOptions {
  double tail_cutoff = 1e-16;  // start where t q^N ≤ tail_cutoff
  double pole_guard = 1e-8;
  double stability_tol = 1e-12;
  bool check_stability = true;  // re-run with 2N
};

struct EvalResult {
  double G = 1.0;
  std::int64_t N = 0;
  double stability_gap = 0.0;  // |G(N) − G(2N)|; zero when not checked
  bool flagged = false;        // gap above stability_tol
  double G_q = 1.0;            // G(w, q t, q) from the same run
  double G_q2 = 1.0;           // G(w, q² t, q)
  double residual = 0.0;       // relative residual of the functional equation
};

// Backward recursion G_n = 1/(1 − x_n G_{n+1} − w x_n G_{n+1} G_{n+2}), x_n = t q^n,
// from G_N = G_{N+1} = 1. Throws PoleError when a denominator falls below the guard.
EvalResult eval_G_backward(const ModelPoint& p, const EvalOptions& opt = {});

// Single pass with explicit N; g1 and g2 receive G_1 and G_2 when non-null.
double backward_pass(double w, double t, double epsilon, std::int64_t N, double pole_guard,
                     double* g1 = nullptr, double* g2 = nullptr);

std::int64_t tail_order(double t, double epsilon, double tail_cutoff);

struct CubicSolution {
  double G = 1.0;
  std::array<std::complex<double>, 3> roots{};
  int root_count = 0;  // 1 when t = 0, 2 for w = 0, else 3
};

// Physical root of w t G³ + t G² − G + 1 = 0, continued from G = 1 at t = 0
// along real t. Throws ConvergenceError once the branch leaves the real axis.
CubicSolution eval_G_q1_cubic(double w, double t, int continuation_steps = 256);

struct CriticalPoint {
  double t_c;
  double G_c;
};

// End point of the physical branch: the double root of the cubic, where
// 2wG² + (1 − 3w)G − 2 = 0 and t = 1/(3wG² + 2G).
CriticalPoint critical_point_q1(double w);

}  // namespace ddp::evaluator
