#pragma once

#include <complex>
#include <functional>

// Reference implementations used only to cross-check the library. Each one
// takes a route that shares no code with the function it checks.
namespace ddp::oracle {

// Ai(x) from its Maclaurin series (two power series in x³), long double
// accumulation. Accurate for |x| ≲ 3.
double airy_ai_series(double x);

// Li₂(z) = Σ z^k/k², |z| ≤ 0.9.
std::complex<double> dilog_series(std::complex<double> z);

// (f(x+h) − f(x−h)) / 2h
std::complex<double> central_difference(const std::function<std::complex<double>(double)>& f, double x, double h);

// Θ₄(0, 0) = Γ(1/4) 4^{−3/4} sin(π/4) / π in closed form.
double theta4_origin();

}  // namespace ddp::oracle
