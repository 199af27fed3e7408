#pragma once

#include <complex>

namespace ddp {

// Principal branch of Li₂(z) = −∫₀^z ln(1−w)/w dw, cut along [1, ∞).
// On the cut, ln(1−x) takes Im = +π, so Li₂(x) = Re − iπ ln x for real x > 1.
// A negative-zero imaginary part is treated as +0.
std::complex<double> dilog(std::complex<double> z);
double dilog(double x);  // x ≤ 1

// ln with the same convention: Im ln(x) = +π for real x < 0, including −0 imaginary parts.
std::complex<double> log_cut(std::complex<double> z);

}  // namespace ddp
