#include "ddp/verification/acceptance.hpp"

#include "ddp/enumeration.hpp"
#include "ddp/evaluator.hpp"
#include "ddp/qseries.hpp"
#include "ddp/saddle.hpp"
#include "ddp/scaling.hpp"
#include "ddp/theta.hpp"
#include "ddp/uniform.hpp"
#include "ddp/verification/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ddp::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
using C = std::complex<double>;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// Collects sub-checks; the criterion passes when all of them do.
class Report {
 public:
  Report(int id, std::string name) : t0_(Clock::now()) {
    r_.id = id;
    r_.name = std::move(name);
  }
  void check(bool ok, const std::string& what) {
    all_ &= ok;
    if (!r_.detail.empty()) r_.detail += "; ";
    r_.detail += (ok ? "" : "[x] ") + what;
  }
  CriterionResult done() {
    r_.pass = all_;
    r_.seconds = since(t0_);
    return r_;
  }
  double elapsed() const { return since(t0_); }

 private:
  CriterionResult r_;
  bool all_ = true;
  Clock::time_point t0_;
};

bool decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

}  // namespace

CriterionResult series_equivalence() {
  Report rep(1, "exact series equivalence (m <= 6)");
  constexpr std::size_t M = 6;
  const auto dp = enumeration::CountTable::from_series(enumeration::series_from_funeq(M));
  const auto brute = enumeration::enumerate_bruteforce(static_cast<std::int64_t>(M));
  const auto ratio = enumeration::CountTable::from_series(qseries::phi_ratio_series(M));
  rep.check(dp == brute, "DP == brute force (" + std::to_string(dp.entries().size()) + " coefficients)");
  rep.check(dp == ratio, "DP == phi-ratio");
  const double s = rep.elapsed();
  rep.check(s < 60.0, "runtime " + num(s) + " s < 60 s");
  return rep.done();
}

CriterionResult qfibonacci_identities() {
  Report rep(2, "q-Fibonacci identities");
  std::size_t first_bad = 0;
  for (std::size_t k = 0; k <= 30 && !first_bad; ++k)
    if (!(qseries::qfibonacci(k) == qseries::qfibonacci_explicit(k))) first_bad = k + 1;
  rep.check(first_bad == 0, first_bad ? "recurrence != explicit at k=" + std::to_string(first_bad - 1)
                                      : "recurrence == explicit for k <= 30");

  const auto g = enumeration::series_from_funeq(8);
  const auto fe = enumeration::check_qfib_funeq(g, 8);
  rep.check(fe.ok(), fe.ok() ? "alternative functional equation exact through t^8"
                             : "residual at t^" + std::to_string(*fe.first_failing_order));

  // s_i = −1/4 + i·(17/4)/99, exact rationals
  using R = qseries::Rational;
  std::size_t negatives = 0;
  for (int i = 0; i < 100; ++i) {
    const R s = R(-1, 4) + R(17 * i, 4 * 99);
    for (std::size_t k = 0; k <= 30; ++k)
      if (qseries::qfibonacci_at_q1(k, s) < 0) ++negatives;
  }
  rep.check(negatives == 0, "F_k(s,1) >= 0 on 100 points of [-1/4, 4], k <= 30 (" + std::to_string(negatives) +
                                " negative)");
  return rep.done();
}

CriterionResult evaluator_oracle() {
  Report rep(3, "evaluator matches phi-ratio on 36 points");
  double worst_rel = 0.0, worst_gap = 0.0;
  for (double q : {0.3, 0.5, 0.7, 0.9})
    for (double w : {-0.1, 0.0, 0.1})
      for (double t : {0.1, 0.2, 0.3}) {
        const double eps = -std::log(q);
        const auto ev = evaluator::eval_G_backward({w, t, eps});
        const C num_ = qseries::phi(C(-w), C(t), C(q), 1).value;
        const C den = qseries::phi(C(-w), C(t), C(q), 0).value;
        const double ref = (num_ / den).real();
        worst_rel = std::max(worst_rel, std::abs(ev.G - ref) / std::abs(ref));
        worst_gap = std::max(worst_gap, ev.stability_gap);
      }
  rep.check(worst_rel <= 1e-12, "max relative error " + num(worst_rel) + " <= 1e-12");
  rep.check(worst_gap < 1e-12, "max N-doubling gap " + num(worst_gap) + " < 1e-12");
  const double s = rep.elapsed();
  rep.check(s < 10.0, "runtime " + num(s) + " s < 10 s");
  return rep.done();
}

CriterionResult saddle_layer() {
  Report rep(4, "saddle layer");
  const double sets[4][2] = {{0.11, 0.31}, {0.11, 0.3317}, {1.0 / 9.0, 1.0 / 3.0}, {0.11, 0.34}};
  double worst_sym = 0.0;
  for (const auto& p : sets) {
    const auto s = saddle::saddles(saddle::PhaseContext(p[0], p[1]));
    for (double r : s.symmetric_residuals) worst_sym = std::max(worst_sym, r);
  }
  rep.check(worst_sym < 1e-12, "symmetric-function residual " + num(worst_sym) + " < 1e-12");

  const double tc = saddle::t_c_plus(0.0).value_or(NAN), zc = saddle::z_c_plus(0.0).value_or(NAN);
  rep.check(std::abs(tc - 0.25) <= 1e-12 && std::abs(zc - 0.5) <= 1e-12,
            "t_c+(0) - 1/4 = " + num(tc - 0.25) + ", z_c - 1/2 = " + num(zc - 0.5));

  const auto triple = saddle::saddles(saddle::PhaseContext(1.0 / 9.0, 1.0 / 3.0));
  double spread = 0.0;
  for (const auto& z : triple.z) spread = std::max(spread, std::abs(z - 1.0 / 3.0));
  rep.check(spread <= 1e-4, "triple root distance from 1/3: " + num(spread) + " <= 1e-4");

  for (const auto& p : sets) {
    const saddle::PhaseContext ctx(p[0], p[1]);
    const auto s = saddle::saddles(ctx);
    const auto path = saddle::trace_descent(ctx, s.z[2], saddle::Direction::Upper);
    const double dev = std::abs(std::abs(path.terminal_arg) - std::numbers::pi / 2.0);
    std::ostringstream os;
    os << "z3 descent (" << p[0] << ", " << p[1] << "): drift " << num(path.im_f_drift) << ", |arg| - pi/2 = "
       << num(dev);
    rep.check(path.im_f_drift < 1e-6 && dev <= 0.05 && path.end_reason == "radius", os.str());
  }
  return rep.done();
}

CriterionResult special_functions() {
  Report rep(5, "special functions");
  double worst_airy = 0.0;
  for (double s : {0.0, 1.0, -1.0, 2.0}) {
    const C arg[1] = {C(s)};
    worst_airy = std::max(worst_airy, std::abs(airy::theta(3, arg) - oracle::airy_ai_series(s)));
  }
  rep.check(worst_airy <= 1e-10, "Theta3 vs Airy series " + num(worst_airy) + " <= 1e-10");

  double worst_pearcey = 0.0;
  for (double x : {-2.0, 0.0, 2.0})
    for (double y : {-2.0, 0.0, 2.0}) worst_pearcey = std::max(worst_pearcey, airy::pearcey_relation_residual(x, y));
  rep.check(worst_pearcey < 1e-8, "Pearcey relation residual " + num(worst_pearcey) + " < 1e-8");

  constexpr double h = 1e-4;
  double worst_fd = 0.0;
  for (double s1 : {-1.0, 0.0, 1.0})
    for (double s2 : {-1.0, 0.0, 1.0}) {
      const auto p = airy::theta4_partials(C(s1), C(s2));
      auto th = [](double a, double b) {
        const C args[2] = {C(a), C(b)};
        return airy::theta(4, args);
      };
      const C fd1 = oracle::central_difference([&](double x) { return th(x, s2); }, s1, h);
      const C fd2 = oracle::central_difference([&](double y) { return th(s1, y); }, s2, h);
      worst_fd = std::max({worst_fd, std::abs(p.d1 - fd1) / std::abs(p.d1), std::abs(p.d2 - fd2) / std::abs(p.d2)});
    }
  rep.check(worst_fd <= 1e-6, "Theta4 partials vs finite differences " + num(worst_fd) + " <= 1e-6");
  return rep.done();
}

CriterionResult uniform_coefficients() {
  Report rep(6, "uniform coefficients");
  const double ln3 = std::log(3.0);
  const double gamma_ref = 2.0 * oracle::dilog_series(C(1.0 / 3.0)).real() + 0.5 * ln3 * ln3;
  const auto o = airy::uniform_coeffs(0.0, 0.0);
  rep.check(std::abs(o.gamma - gamma_ref) <= 1e-12, "gamma(0,0) error " + num(o.gamma - gamma_ref) + " <= 1e-12");

  // Rays avoiding the zero lines of the leading forms.
  double worst_a = 0.0, worst_b = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double th = j * std::numbers::pi / 4.0;
    const double tau = 1e-3 * std::cos(th), delta = 1e-3 * std::sin(th);
    const auto c = airy::uniform_coeffs(tau, delta);
    worst_a = std::max(worst_a, std::abs(c.alpha / airy::alpha_leading(tau, delta) - 1.0));
    worst_b = std::max(worst_b, std::abs(c.beta / airy::beta_leading(tau, delta) - 1.0));
  }
  rep.check(worst_a <= 0.05 && worst_b <= 0.05,
            "alpha, beta vs leading forms at radius 1e-3: " + num(worst_a) + ", " + num(worst_b) + " <= 0.05");

  const double r4 = std::pow(2.0, 0.25), r34 = std::pow(2.0, 0.75), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const double P[2] = {r4 * s3 / 6.0, r4 * s3 / 2.0};
  const double Q[2] = {s6 / 4.0, s6 / 4.0};
  const double R[2] = {5.0 * r34 * s3 / 24.0, r34 * s3 / 8.0};
  double worst = 0.0;
  for (int k = 0; k < 2; ++k)
    worst = std::max({worst, std::abs(o.P[k] - P[k]), std::abs(o.Q[k] - Q[k]), std::abs(o.R[k] - R[k])});
  rep.check(worst <= 1e-10, "P/Q/R at the origin " + num(worst) + " <= 1e-10");
  return rep.done();
}

CriterionResult uniform_asymptotics() {
  Report rep(7, "uniform asymptotics of phi at moderate epsilon");
  const double pts[3][2] = {{0.0, 0.0}, {0.01, 0.0}, {0.0, 0.01}};  // (tau, delta)
  for (const auto& p : pts)
    for (int k = 0; k < 2; ++k) {
      std::vector<double> errs;
      for (double e : {0.02, 0.01, 0.005}) errs.push_back(airy::proposition1_check_natural(p[0], p[1], e, k).rel_error);
      std::ostringstream os;
      os << "(tau, delta) = (" << p[0] << ", " << p[1] << "), k=" << k << ": " << num(errs[0]) << " > "
         << num(errs[1]) << " > " << num(errs[2]);
      rep.check(decreasing(errs), os.str());
    }
  const double s = rep.elapsed();
  rep.check(s < 30.0, "runtime " + num(s) + " s < 30 s");
  return rep.done();
}

CriterionResult scaling_collapse() {
  Report rep(8, "scaling collapse at the multicritical point");
  std::vector<double> dev;
  double slowest = 0.0;
  for (double e : {1e-4, 1e-5, 1e-6}) {
    const auto t0 = Clock::now();
    const auto r = airy::theorem1_check({0.0, 0.0, e});
    slowest = std::max(slowest, since(t0));
    dev.push_back(r.deviation);
  }
  const double target = std::sqrt(10.0);
  for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
    const double ratio = dev[i] / dev[i + 1];
    rep.check(std::abs(ratio / target - 1.0) <= 0.25, "deviation ratio " + num(ratio) + " vs sqrt(10)");
  }
  rep.check(slowest < 5.0, "slowest evaluator call " + num(slowest) + " s < 5 s");
  return rep.done();
}

CriterionResult scaling_curve(unsigned threads) {
  Report rep(9, "scaling-function curve convergence");
  std::vector<double> s;
  for (int i = 0; i <= 50; ++i) s.push_back(-4.0 + 0.1 * i);
  evaluator::EvalOptions opt;
  opt.check_stability = false;
  const auto d = airy::fig7_data(s, {1e-4, 1e-5, 1e-6}, threads, opt);
  const auto poles = airy::F_poles(-6.0, 2.0);
  constexpr double exclusion = 0.3;
  std::vector<double> gap(3, 0.0);
  std::size_t used = 0;
  bool finite = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::any_of(poles.begin(), poles.end(), [&](double p) { return std::abs(s[i] - p) <= exclusion; })) continue;
    ++used;
    for (std::size_t e = 0; e < 3; ++e) {
      const double g = std::abs(d.approx[e][i] - d.exact[i]);
      finite &= std::isfinite(g);
      gap[e] = std::max(gap[e], g);
    }
  }
  rep.check(finite, std::to_string(used) + " points outside pole neighbourhoods");
  rep.check(decreasing(gap), "max-norm gaps " + num(gap[0]) + " > " + num(gap[1]) + " > " + num(gap[2]));
  rep.check(gap[0] >= 3.0 * gap[2], "gap(1e-4)/gap(1e-6) = " + num(gap[0] / gap[2]) + " >= 3");
  return rep.done();
}

CriterionResult exponent_table() {
  Report rep(10, "critical exponents");
  const auto rows = airy::table1_report();
  const auto& m = rows.at(0);  // w = −1/9
  const auto& z = rows.at(1);  // w = 0
  rep.check(m.gamma_u.exponent >= 0.23 && m.gamma_u.exponent <= 0.27,
            "gamma_u(w=-1/9) = " + num(m.gamma_u.exponent) + " in [0.23, 0.27] (R2 " + num(m.gamma_u.r2) + ")");
  rep.check(z.gamma_u.exponent >= 0.30 && z.gamma_u.exponent <= 0.36,
            "gamma_u(w=0) = " + num(z.gamma_u.exponent) + " in [0.30, 0.36] (R2 " + num(z.gamma_u.r2) + ")");
  rep.check(m.gamma_t.exponent >= 0.30 && m.gamma_t.exponent <= 0.36,
            "gamma_t(w=-1/9) = " + num(m.gamma_t.exponent) + " in [0.30, 0.36] (R2 " + num(m.gamma_t.r2) + ")");
  return rep.done();
}

std::vector<Criterion> all_criteria(unsigned threads) {
  return {
      {1, "exact series equivalence", series_equivalence},
      {2, "q-Fibonacci identities", qfibonacci_identities},
      {3, "evaluator oracle", evaluator_oracle},
      {4, "saddle layer", saddle_layer},
      {5, "special functions", special_functions},
      {6, "uniform coefficients", uniform_coefficients},
      {7, "uniform asymptotics", uniform_asymptotics},
      {8, "scaling collapse", scaling_collapse},
      {9, "scaling-function curve", [threads] { return scaling_curve(threads); }},
      {10, "critical exponents", exponent_table},
  };
}

std::vector<CriterionResult> run_all(unsigned threads, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& c : all_criteria(threads)) {
    CriterionResult r;
    const auto t0 = Clock::now();
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.id = c.id;
      r.name = c.name;
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
      r.seconds = since(t0);
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace ddp::acceptance
