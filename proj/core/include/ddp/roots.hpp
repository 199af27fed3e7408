#pragma once

// Polynomial roots for the small real-coefficient polynomials that appear in
// the saddle, evaluator and uniform-coefficient code.

#include <array>
#include <complex>
#include <vector>

namespace ddp {

// Roots of c3 z³ + c2 z² + c1 z + c0 (c3 ≠ 0), trigonometric form when all three
// are real and Cardano otherwise, each followed by one Newton polish that is
// kept only if it lowers the residual. Real roots come back with zero imaginary
// part. Ordering: real roots ascending first, then the complex pair (Im > 0 first).
std::array<std::complex<double>, 3> solve_cubic(double c3, double c2, double c1, double c0);

// All roots of Σ c[i] z^i (ascending coefficients). Leading zeros are dropped;
// degree ≤ 3 goes through the closed forms, higher degree through companion
// matrix eigenvalues with Newton polish.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& ascending);

template <class T>
T horner(const std::vector<double>& ascending, const T& z) {
  T acc(0);
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * z + T(*it);
  return acc;
}

}  // namespace ddp
