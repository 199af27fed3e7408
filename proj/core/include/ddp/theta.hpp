#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ddp::airy {

using Complex = std::complex<double>;

struct ThetaOptions {
  double rel_tol = 1e-14;       // quadrature tolerance
  double tail_log_drop = 42.0;  // ray truncated where the integrand bound fell this many e-folds
  double r_cap = 100.0;
  double s_cap = 50.0;          // |s_j| limit
};

// Θ_k(s₁,…,s_{k−2}) = (1/2πi) ∫ exp(u^k/k − Σ_j s_j u^j) du along the rays
// u = r e^{±iπ/k}, k ∈ {3, 4}. With power > 0 the integrand carries an extra
// factor −u^power, which gives ∂Θ_k/∂s_power.
Complex theta(int k, std::span<const Complex> s, int power = 0, const ThetaOptions& opt = {});

// Ray truncation radius used by theta.
double theta_radius(int k, std::span<const Complex> s, const ThetaOptions& opt = {});

struct Theta4Partials {
  Complex value;  // Θ₄
  Complex d1;     // ∂Θ₄/∂s₁
  Complex d2;     // ∂Θ₄/∂s₂
  double scale;   // (1/2π)∫|integrand| over both rays
};

Theta4Partials theta4_partials(Complex s1, Complex s2, const ThetaOptions& opt = {});

// 𝒫(x,y) = 2 e^{iπ/8} ∫₀^∞ exp(−u⁴ − y u²) cos(x u) du, real x, y.
Complex pearcey(double x, double y, double rel_tol = 1e-14);

// √2 π e^{−iπ/8} [Θ₄((1−i)x/2, iy/2) + i Θ₄((1+i)x/2, −iy/2)]
Complex pearcey_from_theta4(double x, double y, const ThetaOptions& opt = {});
double pearcey_relation_residual(double x, double y);

// Φ(s₁,s₂) = ∂_{s₁} ln Θ₄. Throws ScalingPoleError when |Θ₄| ≤ pole_guard·scale.
double phi_scaling(double s1, double s2, double pole_guard = 1e-12, const ThetaOptions& opt = {});

}  // namespace ddp::airy
