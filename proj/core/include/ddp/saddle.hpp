#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace ddp::saddle {

using Complex = std::complex<double>;

enum class CutPolicy {
  Strict,  // throw BranchCutError on the cuts (−∞, max(a,0)] ∪ [1, ∞)
  OnCut    // evaluate with Im ln(x) = +π for x < 0 (limit from below on [1, ∞))
};

// f(z) = ln t ln z + Li₂(z) − ½ ln²z + Li₂(a/z)
struct PhaseContext {
  double a = 0.0;
  double t = 0.0;
  CutPolicy policy = CutPolicy::Strict;

  PhaseContext() = default;
  PhaseContext(double a_, double t_, CutPolicy p = CutPolicy::Strict);
  bool on_cut(Complex z) const;
};

Complex f_eval(const PhaseContext& ctx, Complex z);
// f'(z) = [ln t − ln(1−z) − ln z + ln(1 − a/z)]/z
Complex f_prime(const PhaseContext& ctx, Complex z);
// f^{(n)}(z), n ≥ 1
Complex f_derivative(const PhaseContext& ctx, Complex z, int n);
// Leading amplitude z/√((1−z)(z−a)), positive on a < z < 1.
Complex g0(const PhaseContext& ctx, Complex z);

enum class SaddleCase { i, ii, iii_below, iii_between, iii_above, iv, v };
std::string to_string(SaddleCase c);

struct SaddleSet {
  std::array<Complex, 3> z{};
  SaddleCase case_tag = SaddleCase::v;
  std::optional<double> t_c_minus, t_c_plus, z_c_minus, z_c_plus;
  // |z1+z2+z3 − 1|, |Σ z_i z_j − t|, |z1 z2 z3 − t a|
  std::array<double, 3> symmetric_residuals{};
};

// Closed forms; defined for a ≤ 1/9 (and a ≥ 1).
std::optional<double> t_c_minus(double a);
std::optional<double> t_c_plus(double a);
std::optional<double> z_c_minus(double a);
std::optional<double> z_c_plus(double a);

// Roots of z³ − z² + t z − t a, labelled:
//   all real: z1 < z2 < z3;
//   complex pair left of the real root: z1 (Im > 0), z2 = conj z1, z3 real;
//   complex pair right of the real root: z1 real, z3 (Im > 0), z2 = conj z3.
SaddleSet saddles(const PhaseContext& ctx, double a_max = 0.5);

struct TraceOptions {
  double radius_cap = 1e12;
  double near_zero = 1e-10;
  double step_fraction = 0.05;  // step ≤ step_fraction·|z|
  double h_min = 1e-7;  // relative to |z| once |z| < 1
  double corrector_tol = 1e-13;
  int max_steps = 200000;
};

enum class Direction { Upper, Lower };

struct DescentPath {
  std::vector<Complex> points;
  std::vector<Complex> f_values;
  double im_f_drift = 0.0;
  double terminal_arg = 0.0;
  bool monotone = true;        // Re f strictly decreasing
  std::string end_reason;      // "radius", "origin", "max_steps"
  int takeoff_order = 2;       // order of the first non-vanishing derivative
};

// Steepest-descent curve Im f = Im f(z_s) leaving the saddle z_s.
// Upper picks the take-off direction with the largest imaginary part.
// Throws PathLostError when the corrector fails.
DescentPath trace_descent(const PhaseContext& ctx, Complex z_s, Direction dir = Direction::Upper,
                          const TraceOptions& opt = {});

// Take-off angles (θ with f^{(n)} e^{inθ} real negative), n ≥ 2.
std::vector<double> takeoff_angles(const PhaseContext& ctx, Complex z_s, int* order = nullptr);

// Remainder bound for the m = 1 Euler–Maclaurin term; ψ = φ − π/2 for φ > 0, φ + π/2 for φ < 0.
double r1_bound(Complex z);

}  // namespace ddp::saddle
