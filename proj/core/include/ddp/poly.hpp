#pragma once

// Exact integer polynomials and truncated power series used by the
// enumeration and exact q-series code.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace ddp {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kNoTruncation = std::numeric_limits<std::size_t>::max();

// Polynomial in q with unbounded integer coefficients. coeff(n) multiplies q^n.
// Trailing zeros are trimmed so that equality is structural.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly constant(const BigInt& c) { return monomial(0, c); }
  static QPoly monomial(std::size_t n, const BigInt& c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Number of stored coefficients (degree + 1; zero for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }
  const BigInt& coeff(std::size_t n) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  void add_term(std::size_t n, const BigInt& c);

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly operator-() const;

  // q^shift · p(q)
  QPoly shifted(std::size_t shift) const;
  // Drops every power above max_power.
  void truncate(std::size_t max_power);

  // acc += q^shift · a · b, keeping powers ≤ cap.
  static void multiply_accumulate(QPoly& acc, const QPoly& a, const QPoly& b, std::size_t shift = 0,
                                  std::size_t cap = kNoTruncation);

  template <class T>
  T evaluate(const T& q) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + T(*it);
    return acc;
  }

  friend bool operator==(const QPoly&, const QPoly&) = default;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  std::string to_string(char var = 'q') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Polynomial in (x, q): row(i) is the q-polynomial multiplying x^i.
// The same type carries w (jump weight) and s (q-Fibonacci variable).
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly constant(const BigInt& c);
  static BiPoly monomial(std::size_t i, std::size_t j, const BigInt& c = 1);
  static BiPoly from_row(std::size_t i, QPoly row);

  bool is_zero() const noexcept { return rows_.empty(); }
  // Number of stored x-rows (x-degree + 1).
  std::size_t rows() const noexcept { return rows_.size(); }
  const QPoly& row(std::size_t i) const;
  const BigInt& coeff(std::size_t i, std::size_t j) const { return row(i).coeff(j); }
  std::size_t q_degree_bound() const;  // max row size
  std::size_t nonzero_terms() const;

  void add_term(std::size_t i, std::size_t j, const BigInt& c);
  void add_row(std::size_t i, const QPoly& p);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);

  BiPoly shifted(std::size_t x_shift, std::size_t q_shift) const;
  void truncate_q(std::size_t max_power);

  static void multiply_accumulate(BiPoly& acc, const BiPoly& a, const BiPoly& b,
                                  std::size_t q_shift = 0, std::size_t q_cap = kNoTruncation);

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = rows_[i].coeffs();
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) f(i, j, c[j]);
    }
  }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  std::string to_string(char xvar = 'w', char qvar = 'q') const;

 private:
  void trim();
  std::vector<QPoly> rows_;
};

// Formal power series Σ_m t^m c_m(x, q) truncated after t^max_order.
class BivariateSeries {
 public:
  explicit BivariateSeries(std::size_t max_order) : orders_(max_order + 1) {}

  std::size_t max_order() const noexcept { return orders_.size() - 1; }
  const BiPoly& operator[](std::size_t m) const { return orders_.at(m); }
  BiPoly& operator[](std::size_t m) { return orders_.at(m); }

  // S(q^j t): order m picks up q^{j m}.
  BivariateSeries with_scaled_argument(std::size_t j) const;
  BivariateSeries truncated(std::size_t max_order) const;

  // Truncated product; q powers above q_cap are dropped when given.
  static BivariateSeries multiply(const BivariateSeries& a, const BivariateSeries& b,
                                  std::size_t q_cap = kNoTruncation);

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::vector<BiPoly> orders_;
};

}  // namespace ddp
