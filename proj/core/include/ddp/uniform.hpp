#pragma once

#include <array>
#include <complex>

namespace ddp::airy {

// Coefficients of the local map f(z) = ¼u⁴ − αu² − βu + γ around the
// multicritical saddle, and the amplitude expansion g₀(z) z^{−k} dz/du ≈ P + Qu + Ru²
// for shift k ∈ {0, 1}.
struct UniformCoeffs {
  double tau = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::array<double, 2> P{}, Q{}, R{};
  std::array<std::complex<double>, 3> z{};  // saddles, paired with u
  std::array<std::complex<double>, 3> u{};  // roots of u³ − 2αu − β
  double match_residual = 0.0;              // max |p(u_j) − f(z_j)|
  bool origin = false;                      // closed forms at τ = δ = 0
};

// (τ, δ) = (1/3 − t, 1/9 − a). Throws std::invalid_argument outside the disk and
// ConvergenceError when the branch choice is ambiguous.
UniformCoeffs uniform_coeffs(double tau, double delta, double disk_radius = 0.05);

// Leading forms α ≈ (27√2/8)(δ + τ²/40), β ≈ 3·2^{1/4}(τ − 3δ/2).
double alpha_leading(double tau, double delta);
double beta_leading(double tau, double delta);

// Taylor coefficients f^{(n)}(1/3)/n! at a = 1/9, t = 1/3, n = 0..6.
std::array<double, 7> multicritical_taylor();

// dz/du, d²z/du², d³z/du³ at u = 0 by series reversion.
std::array<double, 3> multicritical_map_derivatives();

}  // namespace ddp::airy
