#pragma once

#include "ddp/error.hpp"
#include "ddp/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>

namespace ddp::qseries {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

struct PhiOptions {
  double tail_tol = 1e-17;        // relative to the running partial sum
  std::size_t max_terms = 1000000;
};

template <class S>
struct PhiValue {
  S value;
  std::size_t terms;  // number of terms summed
};

// φ(a, q^shift·t, q) = Σ_n (a;q)_n/(q;q)_n (−q^shift t)^n q^{n²−n}.
// S may be double, std::complex<double> or a boost::multiprecision float
// (with expression templates off).
// Stops once the current term is below tail_tol·|sum| and the term ratio
// guarantees geometric decay with factor ≤ 1/2.
template <class S, class R>
PhiValue<S> phi_series(const S& a, const S& t, const S& q, unsigned shift, const R& tail_tol,
                       std::size_t max_terms);

// Double-precision complex φ.
PhiValue<Complex> phi(Complex a, Complex t, Complex q, unsigned shift = 0, const PhiOptions& opt = {});

// (z;q)_n
Complex qpochhammer(Complex z, Complex q, std::size_t n);
// (z;q)_∞ truncated once the remaining factors change the product by < tol.
Complex qpochhammer_inf(Complex z, Complex q, double tol = 1e-17, std::size_t max_factors = 10000000);

// A(a,q) = (q;q)_∞ (a;q)_∞ and its logarithm for real 0 ≤ a < 1, 0 < q < 1.
Complex A_factor(Complex a, Complex q, double tol = 1e-17);
double log_A_factor(double a, double q, double tol = 1e-18);

// Gaussian binomial [n choose l]_q.
QPoly qbinomial(std::size_t n, std::size_t l);

// F_k(s,q) by the recurrence F_n = F_{n−1} + q^{n−1} s F_{n−2}. Row index is the power of s.
BiPoly qfibonacci(std::size_t k);
// F_k(s,q) = Σ_l q^{l²} [k−l choose l]_q s^l.
BiPoly qfibonacci_explicit(std::size_t k);
// F_k(s, 1) at rational s.
Rational qfibonacci_at_q1(std::size_t k, const Rational& s);

// Taylor coefficients in t of φ(−w,qt,q)/φ(−w,t,q) in Z[w][[q]], truncated after q^q_cap
// (default: max_m² + 1). Row index is the power of w.
BivariateSeries phi_ratio_series(std::size_t max_m, std::size_t q_cap = kNoTruncation);

// ---- implementation --------------------------------------------------------

namespace detail {
template <class S>
auto magnitude(const S& x) {
  using std::abs;
  return abs(x);
}

template <class M>
bool finite_magnitude(const M& m) {
  using std::isfinite;
  return isfinite(m);
}
}  // namespace detail

template <class S, class R>
PhiValue<S> phi_series(const S& a, const S& t, const S& q, unsigned shift, const R& tail_tol,
                       std::size_t max_terms) {
  using detail::magnitude;
  if (!(magnitude(q) < 1)) throw ConvergenceError("phi: |q| >= 1, series does not converge");
  S x = -t;
  for (unsigned i = 0; i < shift; ++i) x *= q;
  S term(1), sum(1);
  S qn(1);  // q^n
  for (std::size_t n = 0; n < max_terms; ++n) {
    // term_{n+1}/term_n = (1 − a q^n)/(1 − q^{n+1}) · x · q^{2n}
    const S qn1 = qn * q;
    const S ratio = (S(1) - a * qn) / (S(1) - qn1) * x * qn * qn;
    term *= ratio;
    sum += term;
    qn = qn1;
    const auto sm = magnitude(sum);
    if (!detail::finite_magnitude(sm) || !detail::finite_magnitude(magnitude(term)))
      throw OverflowError("phi: partial sum overflowed at n=" + std::to_string(n + 1));
    // The next ratio bound is |x| |q|^{2n+2} (1+|a||q|^{n+1})/(1−|q|^{n+2}).
    const auto qa = magnitude(qn);
    const auto next_bound = magnitude(x) * qa * qa * (1 + magnitude(a) * qa) / (1 - qa * magnitude(q));
    if (magnitude(term) <= tail_tol * sm && next_bound <= 0.5) return {sum, n + 2};
    if (term == S(0) && next_bound <= 0.5) return {sum, n + 2};
  }
  throw ConvergenceError("phi: term cap of " + std::to_string(max_terms) + " reached");
}

}  // namespace ddp::qseries
