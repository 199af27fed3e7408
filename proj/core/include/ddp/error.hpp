#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddp {

// Base of every error raised by the library. Precondition violations use
// std::invalid_argument directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure could not reach its tolerance (series tail, quadrature,
// Newton corrector, branch tracking).
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The backward recursion hit a denominator below the pole guard.
class PoleError : public Error {
 public:
  PoleError(std::int64_t index, double denominator)
      : Error("pole proximity in backward recursion at n=" + std::to_string(index) +
              " (|denominator|=" + std::to_string(denominator) + ")"),
        index_(index),
        denominator_(denominator) {}

  std::int64_t index() const noexcept { return index_; }
  double denominator() const noexcept { return denominator_; }

 private:
  std::int64_t index_;
  double denominator_;
};

// Evaluation requested on a branch cut without a side convention.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

// A lattice-path convention check failed (e.g. a non-integral area).
class ConventionError : public Error {
 public:
  using Error::Error;
};

// Floating-point overflow of an intermediate that the caller must avoid by
// choosing a milder parameter range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Θ₄ vanishes (to working precision) at the requested scaling argument.
class ScalingPoleError : public Error {
 public:
  using Error::Error;
};

// Descent-path corrector lost the level curve.
class PathLostError : public Error {
 public:
  PathLostError(const std::string& what, std::complex<double> last_good)
      : Error(what), last_good_(last_good) {}
  std::complex<double> last_good() const noexcept { return last_good_; }

 private:
  std::complex<double> last_good_;
};

}  // namespace ddp
