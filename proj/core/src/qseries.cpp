#include "ddp/qseries.hpp"

#include <stdexcept>
#include <vector>

namespace ddp::qseries {

PhiValue<Complex> phi(Complex a, Complex t, Complex q, unsigned shift, const PhiOptions& opt) {
  if (!(std::isfinite(t.real()) && std::isfinite(t.imag()))) throw std::invalid_argument("phi: t must be finite");
  return phi_series<Complex, double>(a, t, q, shift, opt.tail_tol, opt.max_terms);
}

Complex qpochhammer(Complex z, Complex q, std::size_t n) {
  Complex p = 1.0, qk = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    p *= 1.0 - qk * z;
    qk *= q;
  }
  return p;
}

Complex qpochhammer_inf(Complex z, Complex q, double tol, std::size_t max_factors) {
  const double aq = std::abs(q);
  if (!(aq < 1.0)) throw ConvergenceError("qpochhammer_inf: |q| >= 1");
  Complex p = 1.0, qk = 1.0;
  for (std::size_t k = 0; k < max_factors; ++k) {
    // |log ∏_{j≥k}(1 − z q^j)| ≲ 2|z||q|^k/(1−|q|) once |z q^k| ≤ 1/2
    const double zk = std::abs(z * qk);
    if (zk <= 0.5 && 2.0 * zk / (1.0 - aq) < tol) return p;
    p *= 1.0 - qk * z;
    qk *= q;
  }
  throw ConvergenceError("qpochhammer_inf: tail bound not reached within " + std::to_string(max_factors) +
                         " factors");
}

Complex A_factor(Complex a, Complex q, double tol) {
  return qpochhammer_inf(q, q, tol) * qpochhammer_inf(a, q, tol);
}

double log_A_factor(double a, double q, double tol) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("log_A_factor: need 0 < q < 1");
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("log_A_factor: need 0 <= a < 1");
  double s = 0.0, qk = 1.0;
  for (std::size_t k = 0; k < 100000000; ++k) {
    const double u = a * qk;  // factor (1 − a q^k)
    const double v = qk * q;  // factor (1 − q^{k+1})
    if (2.0 * (u + v) / (1.0 - q) < tol) return s;
    s += std::log1p(-u) + std::log1p(-v);
    qk *= q;
  }
  throw ConvergenceError("log_A_factor: tail bound not reached");
}

QPoly qbinomial(std::size_t n, std::size_t l) {
  if (l > n) return {};
  // Pascal rows: [n,l] = [n−1,l−1] + q^l [n−1,l]
  std::vector<QPoly> row{QPoly::constant(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<QPoly> next(r + 1);
    next[0] = QPoly::constant(1);
    next[r] = QPoly::constant(1);
    for (std::size_t j = 1; j < r; ++j) next[j] = row[j - 1] + row[j].shifted(j);
    row = std::move(next);
  }
  return row[l];
}

BiPoly qfibonacci(std::size_t k) {
  BiPoly prev = BiPoly::constant(1), cur = BiPoly::constant(1);  // F_0, F_1
  for (std::size_t n = 2; n <= k; ++n) {
    BiPoly next = cur + prev.shifted(1, n - 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BiPoly qfibonacci_explicit(std::size_t k) {
  BiPoly f;
  for (std::size_t l = 0; 2 * l <= k; ++l) f.add_row(l, qbinomial(k - l, l).shifted(l * l));
  return f;
}

Rational qfibonacci_at_q1(std::size_t k, const Rational& s) {
  Rational acc = 0, sp = 1;
  for (std::size_t l = 0; 2 * l <= k; ++l) {
    BigInt binom = 1;
    for (std::size_t i = 0; i < l; ++i) binom = binom * (k - l - i) / (i + 1);
    acc += Rational(binom) * sp;
    sp *= s;
  }
  return acc;
}

BivariateSeries phi_ratio_series(std::size_t max_m, std::size_t q_cap) {
  if (q_cap == kNoTruncation) q_cap = max_m * max_m + 1;
  // c[n] = [t^n] φ(−w, t, q) = (−1)^n q^{n²−n} (−w;q)_n / (q;q)_n, truncated after q^q_cap.
  std::vector<BiPoly> c(max_m + 1);
  std::vector<BigInt> inv(q_cap + 1, BigInt(0));  // 1/(q;q)_n
  inv[0] = 1;
  BiPoly wpoch = BiPoly::constant(1);  // (−w;q)_n
  c[0] = BiPoly::constant(1);
  for (std::size_t n = 1; n <= max_m; ++n) {
    for (std::size_t i = n; i <= q_cap; ++i) inv[i] += inv[i - n];
    BiPoly factor = BiPoly::constant(1);
    factor.add_term(1, n - 1, 1);
    wpoch = wpoch * factor;
    wpoch.truncate_q(q_cap);
    BiPoly cn;
    BiPoly::multiply_accumulate(cn, wpoch, BiPoly::from_row(0, QPoly(inv)), n * n - n, q_cap);
    c[n] = (n % 2 == 0) ? cn : BiPoly() - cn;
  }

  BivariateSeries g(max_m);
  g[0] = BiPoly::constant(1);
  for (std::size_t m = 1; m <= max_m; ++m) {
    BiPoly gm = c[m].shifted(0, m);
    gm.truncate_q(q_cap);
    BiPoly sub;
    for (std::size_t i = 0; i < m; ++i) BiPoly::multiply_accumulate(sub, g[i], c[m - i], 0, q_cap);
    g[m] = gm - sub;
  }
  return g;
}

}  // namespace ddp::qseries
