#pragma once

#include "ddp/evaluator.hpp"
#include "ddp/theta.hpp"
#include "ddp/uniform.hpp"

#include <string>
#include <vector>

namespace ddp::airy {

struct ScalingInput {
  double delta = 0.0;
  double tau = 0.0;
  double epsilon = 0.0;

  // s₁ = 3·2^{1/4}(τ − 3δ/2) ε^{−3/4}
  double s1() const;
  // s₂ = (27√2/8)(δ + τ²/40) ε^{−1/2}
  double s2() const;
};

// ---- uniform asymptotics of φ at moderate ε ----------------------------------

struct Proposition1Result {
  double log_lhs = 0.0;  // ln φ(a, q^k t, q), direct summation
  double log_rhs = 0.0;  // ln of the Θ₄ assembly
  double rel_error = 0.0;
  int digits = 0;        // decimal digits used for the direct sum
  UniformCoeffs coeffs;
};

// ln[A(a,q) e^{γ/ε} (P ε^{1/4}Θ₄ − Q ε^{1/2}Θ₄^{(1)} − R ε^{3/4}Θ₄^{(2)})] at s₁ = βε^{−3/4},
// s₂ = αε^{−1/2}. Throws OverflowError when γ/ε exceeds the double range.
double proposition1_log_rhs(const UniformCoeffs& c, double epsilon, int k_shift);

// ln φ(1/9 − δ, q^k (1/3 − τ), q) with q = e^{−ε}, summed in extended precision
// (100, 200, then 400 digits until two precisions agree).
double log_phi_direct(double tau, double delta, double epsilon, int k_shift, int* digits_used = nullptr);

Proposition1Result proposition1_check_natural(double tau, double delta, double epsilon, int k_shift);
Proposition1Result proposition1_check(double a, double t, double epsilon, int k_shift);

// ---- ratio-level scaling at small ε ------------------------------------------

struct Theorem1Result {
  double lhs = 0.0;
  double rhs = 0.0;
  double deviation = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double phi = 0.0;
  evaluator::EvalResult eval;
};

// lhs = G(δ − 1/9, 1/3 − τ, e^{−ε}), rhs = 3(1 + 2^{1/4}Φ(s₁,s₂)ε^{1/4}).
Theorem1Result theorem1_check(const ScalingInput& in, const evaluator::EvalOptions& opt = {},
                              const ThetaOptions& topt = {});

// F(s) = 2^{1/4} Φ(2^{1/4}s, 0)
double F_exact(double s, const ThetaOptions& topt = {});
// F_ε(s) = (G(−1/9, (1 − sε^{3/4})/3, e^{−ε})/3 − 1) ε^{−1/4}
double F_epsilon(double s, double epsilon, const evaluator::EvalOptions& opt = {});

// Real zeros of Θ₄(2^{1/4}s, 0) in [lo, hi] (poles of F), by sign change and bisection.
std::vector<double> F_poles(double lo, double hi, double step = 0.05);

struct Fig7Data {
  std::vector<double> s;
  std::vector<double> epsilons;
  std::vector<double> exact;                // NaN at a pole
  std::vector<std::vector<double>> approx;  // approx[e][i]; NaN where the evaluator hit a pole
};

Fig7Data fig7_data(const std::vector<double>& s, const std::vector<double>& epsilons, unsigned threads = 1,
                   const evaluator::EvalOptions& opt = {}, const ThetaOptions& topt = {});

// ---- exponent fits ------------------------------------------------------------

struct PowerFit {
  double exponent = 0.0;  // slope of ln y against ln x
  double intercept = 0.0;
  double r2 = 0.0;
  bool flagged = false;   // r2 < 0.99
  std::vector<double> x, y;
};

PowerFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> log_spaced(double lo, double hi, std::size_t n);

// γ_u: |G(w, t_c, e^{−ε}) − G(w, t_c, 1)| against ε.
PowerFit fit_gamma_u(double w, const std::vector<double>& epsilons);
// γ_t: |G(w, t, 1) − G(w, t_c, 1)| against t_c − t.
PowerFit fit_gamma_t(double w, const std::vector<double>& dts);

struct Table1Row {
  double w = 0.0;
  std::string label;
  PowerFit gamma_u, gamma_t;
  double expected_gamma_u = 0.0, expected_gamma_t = 0.0;
  double phi_cr() const { return gamma_u.exponent / gamma_t.exponent; }
  double expected_phi_cr() const { return expected_gamma_u / expected_gamma_t; }
};

// Rows for w = −1/9 and w = 0: ε on 9 log-spaced points in [1e−5, 1e−3],
// t_c − t on 9 log-spaced points in [1e−6, 1e−3].
std::vector<Table1Row> table1_report();

}  // namespace ddp::airy
