#include "ddp/scaling.hpp"

#include "ddp/error.hpp"
#include "ddp/io.hpp"
#include "ddp/qseries.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddp::airy {

namespace mp = boost::multiprecision;

namespace {

const double kQuarticRoot2 = std::pow(2.0, 0.25);

template <unsigned Digits>
using Float = mp::number<mp::cpp_bin_float<Digits>, mp::et_off>;

// ln|φ| (kept at 60 digits for the agreement test) and its sign.
struct LogPhi {
  Float<60> log_abs;
  int sign;
};

template <unsigned Digits>
LogPhi log_phi_at(double tau, double delta, double epsilon, int k_shift) {
  using F = Float<Digits>;
  const F a = F(1) / 9 - F(delta);
  const F t = F(1) / 3 - F(tau);
  const F q = exp(-F(epsilon));
  const F tol = pow(F(10), -static_cast<int>(Digits) + 5);
  const auto r = qseries::phi_series<F, F>(a, t, q, static_cast<unsigned>(k_shift), tol, 1000000);
  if (r.value == 0) throw ConvergenceError("direct phi sum vanished");
  return {Float<60>(log(abs(r.value))), r.value > 0 ? 1 : -1};
}

bool agree(const LogPhi& x, const LogPhi& y) {
  using std::max;
  return x.sign == y.sign && abs(x.log_abs - y.log_abs) <= Float<60>(1e-25) * max(Float<60>(1), abs(x.log_abs));
}

std::pair<double, int> log_phi_signed(double tau, double delta, double epsilon, int k_shift, int& digits) {
  auto lo = log_phi_at<100>(tau, delta, epsilon, k_shift);
  auto hi = log_phi_at<200>(tau, delta, epsilon, k_shift);
  digits = 200;
  if (!agree(lo, hi)) {
    lo = hi;
    hi = log_phi_at<400>(tau, delta, epsilon, k_shift);
    digits = 400;
    if (!agree(lo, hi)) throw ConvergenceError("direct phi sum unresolved at 400 digits");
  }
  return {static_cast<double>(hi.log_abs), hi.sign};
}

// Both sides of the comparison as signed logarithms.
struct SignedLog {
  double log_abs;
  int sign;
};

SignedLog rhs_signed(const UniformCoeffs& c, double epsilon, int k_shift) {
  if (k_shift < 0 || k_shift > 1) throw std::invalid_argument("proposition1: shift must be 0 or 1");
  const std::size_t k = static_cast<std::size_t>(k_shift);
  const double e14 = std::pow(epsilon, 0.25);
  const auto th = theta4_partials(Complex(c.beta / (e14 * e14 * e14)), Complex(c.alpha / (e14 * e14)));
  const double bracket = c.P[k] * e14 * th.value.real() - c.Q[k] * e14 * e14 * th.d1.real() -
                         c.R[k] * e14 * e14 * e14 * th.d2.real();
  if (!std::isfinite(c.gamma / epsilon)) throw OverflowError("proposition1: gamma/epsilon is not finite");
  const double a = 1.0 / 9.0 - c.delta;
  const double log_a = qseries::log_A_factor(a, std::exp(-epsilon));
  return {log_a + c.gamma / epsilon + std::log(std::abs(bracket)), bracket > 0 ? 1 : (bracket < 0 ? -1 : 0)};
}

Proposition1Result assemble(const UniformCoeffs& c, double tau, double delta, double epsilon, int k_shift) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("proposition1: epsilon must be positive");
  Proposition1Result r;
  r.coeffs = c;
  const SignedLog rhs = rhs_signed(c, epsilon, k_shift);
  int digits = 0;
  const auto lhs = log_phi_signed(tau, delta, epsilon, k_shift, digits);
  r.log_lhs = lhs.first;
  const int lhs_sign = lhs.second;
  r.digits = digits;
  r.log_rhs = rhs.log_abs;
  const double ratio = std::exp(rhs.log_abs - r.log_lhs);
  r.rel_error = rhs.sign == lhs_sign ? std::abs(std::expm1(rhs.log_abs - r.log_lhs)) : 1.0 + ratio;
  return r;
}

}  // namespace

double ScalingInput::s1() const { return 3.0 * kQuarticRoot2 * (tau - 1.5 * delta) * std::pow(epsilon, -0.75); }

double ScalingInput::s2() const {
  return 27.0 * std::sqrt(2.0) / 8.0 * (delta + tau * tau / 40.0) / std::sqrt(epsilon);
}

double proposition1_log_rhs(const UniformCoeffs& c, double epsilon, int k_shift) {
  return rhs_signed(c, epsilon, k_shift).log_abs;
}

double log_phi_direct(double tau, double delta, double epsilon, int k_shift, int* digits_used) {
  int digits = 0;
  const double v = log_phi_signed(tau, delta, epsilon, k_shift, digits).first;
  if (digits_used) *digits_used = digits;
  return v;
}

Proposition1Result proposition1_check_natural(double tau, double delta, double epsilon, int k_shift) {
  return assemble(uniform_coeffs(tau, delta), tau, delta, epsilon, k_shift);
}

Proposition1Result proposition1_check(double a, double t, double epsilon, int k_shift) {
  return proposition1_check_natural(1.0 / 3.0 - t, 1.0 / 9.0 - a, epsilon, k_shift);
}

Theorem1Result theorem1_check(const ScalingInput& in, const evaluator::EvalOptions& opt, const ThetaOptions& topt) {
  Theorem1Result r;
  r.s1 = in.s1();
  r.s2 = in.s2();
  r.eval = evaluator::eval_G_backward(evaluator::ModelPoint::from_natural(in.delta, in.tau, in.epsilon), opt);
  r.lhs = r.eval.G;
  r.phi = phi_scaling(r.s1, r.s2, 1e-12, topt);
  r.rhs = 3.0 * (1.0 + kQuarticRoot2 * r.phi * std::pow(in.epsilon, 0.25));
  r.deviation = std::abs(r.lhs - r.rhs);
  return r;
}

double F_exact(double s, const ThetaOptions& topt) {
  return kQuarticRoot2 * phi_scaling(kQuarticRoot2 * s, 0.0, 1e-12, topt);
}

double F_epsilon(double s, double epsilon, const evaluator::EvalOptions& opt) {
  const double t = (1.0 - s * std::pow(epsilon, 0.75)) / 3.0;
  const auto r = evaluator::eval_G_backward({-1.0 / 9.0, t, epsilon}, opt);
  return (r.G / 3.0 - 1.0) * std::pow(epsilon, -0.25);
}

std::vector<double> F_poles(double lo, double hi, double step) {
  if (!(hi > lo) || !(step > 0.0)) throw std::invalid_argument("F_poles: empty interval");
  auto th = [](double s) {
    const Complex args[2] = {Complex(kQuarticRoot2 * s), Complex(0.0)};
    return theta(4, args).real();
  };
  std::vector<double> poles;
  double x0 = lo, y0 = th(lo);
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  for (std::size_t i = 1; i <= n; ++i) {
    const double x1 = std::min(hi, lo + static_cast<double>(i) * step);
    const double y1 = th(x1);
    if (y0 == 0.0) poles.push_back(x0);
    else if (y0 * y1 < 0.0) {
      double a = x0, b = x1, ya = y0;
      for (int it = 0; it < 80 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b), ym = th(m);
        if (ym == 0.0) a = b = m;
        else if ((ym < 0.0) == (ya < 0.0)) {
          a = m;
          ya = ym;
        } else b = m;
      }
      poles.push_back(0.5 * (a + b));
    }
    x0 = x1;
    y0 = y1;
  }
  return poles;
}

Fig7Data fig7_data(const std::vector<double>& s, const std::vector<double>& epsilons, unsigned threads,
                   const evaluator::EvalOptions& opt, const ThetaOptions& topt) {
  Fig7Data d;
  d.s = s;
  d.epsilons = epsilons;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  d.exact.assign(s.size(), nan);
  d.approx.assign(epsilons.size(), std::vector<double>(s.size(), nan));
  const std::size_t ns = s.size();
  io::parallel_for(ns * (epsilons.size() + 1), threads, [&](std::size_t job) {
    const std::size_t col = job / ns, i = job % ns;
    if (col == 0) {
      try {
        d.exact[i] = F_exact(s[i], topt);
      } catch (const ScalingPoleError&) {
      }
    } else {
      try {
        d.approx[col - 1][i] = F_epsilon(s[i], epsilons[col - 1], opt);
      } catch (const PoleError&) {
      }
    }
  });
  return d;
}

PowerFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_fit: need two or more paired samples");
  PowerFit f;
  f.x = x;
  f.y = y;
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("loglog_fit: samples must be positive");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double vx = sxx - sx * sx / n, vy = syy - sy * sy / n, cxy = sxy - sx * sy / n;
  f.exponent = cxy / vx;
  f.intercept = (sy - f.exponent * sx) / n;
  f.r2 = vy > 0.0 ? cxy * cxy / (vx * vy) : 1.0;
  f.flagged = f.r2 < 0.99;
  return f;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_spaced: bad range");
  std::vector<double> v(n);
  const double l0 = std::log(lo), l1 = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

PowerFit fit_gamma_u(double w, const std::vector<double>& epsilons) {
  const auto cp = evaluator::critical_point_q1(w);
  const double g1 = evaluator::eval_G_q1_cubic(w, cp.t_c).G;
  std::vector<double> y;
  for (double e : epsilons) y.push_back(std::abs(evaluator::eval_G_backward({w, cp.t_c, e}).G - g1));
  return loglog_fit(epsilons, y);
}

PowerFit fit_gamma_t(double w, const std::vector<double>& dts) {
  const auto cp = evaluator::critical_point_q1(w);
  std::vector<double> y;
  for (double dt : dts) y.push_back(std::abs(evaluator::eval_G_q1_cubic(w, cp.t_c - dt).G - cp.G_c));
  return loglog_fit(dts, y);
}

std::vector<Table1Row> table1_report() {
  const auto eps = log_spaced(1e-5, 1e-3, 9);
  const auto dts = log_spaced(1e-6, 1e-3, 9);
  std::vector<Table1Row> rows;
  const struct {
    double w;
    const char* label;
    double gu, gt;
  } spec[] = {{-1.0 / 9.0, "w=-1/9", 0.25, 1.0 / 3.0}, {0.0, "w=0", 1.0 / 3.0, 0.5}};
  for (const auto& s : spec) {
    Table1Row r;
    r.w = s.w;
    r.label = s.label;
    r.gamma_u = fit_gamma_u(s.w, eps);
    r.gamma_t = fit_gamma_t(s.w, dts);
    r.expected_gamma_u = s.gu;
    r.expected_gamma_t = s.gt;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace ddp::airy
