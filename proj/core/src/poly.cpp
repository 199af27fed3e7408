#include "ddp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ddp {

namespace {
const BigInt kZero = 0;
const QPoly kZeroPoly{};
}  // namespace

// ---- QPoly ------------------------------------------------------------------

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::size_t n, const BigInt& c) {
  QPoly p;
  p.add_term(n, c);
  return p;
}

const BigInt& QPoly::coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : kZero; }

void QPoly::add_term(std::size_t n, const BigInt& c) {
  if (c == 0) return;
  if (n >= coeffs_.size()) coeffs_.resize(n + 1);
  coeffs_[n] += c;
  trim();
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::shifted(std::size_t shift) const {
  if (is_zero()) return {};
  QPoly r;
  r.coeffs_.assign(shift, BigInt(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

void QPoly::truncate(std::size_t max_power) {
  if (max_power != kNoTruncation && coeffs_.size() > max_power + 1) coeffs_.resize(max_power + 1);
  trim();
}

void QPoly::multiply_accumulate(QPoly& acc, const QPoly& a, const QPoly& b, std::size_t shift,
                                std::size_t cap) {
  if (a.is_zero() || b.is_zero() || shift > cap) return;
  std::size_t top = shift + (a.size() - 1) + (b.size() - 1);
  if (cap != kNoTruncation) top = std::min(top, cap);
  if (acc.coeffs_.size() < top + 1) acc.coeffs_.resize(top + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BigInt& ai = a.coeffs_[i];
    if (ai == 0) continue;
    if (shift + i > top) break;
    const std::size_t jmax = std::min(b.size() - 1, top - shift - i);
    for (std::size_t j = 0; j <= jmax; ++j) {
      const BigInt& bj = b.coeffs_[j];
      if (bj == 0) continue;
      acc.coeffs_[shift + i + j] += ai * bj;
    }
  }
  acc.trim();
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  QPoly::multiply_accumulate(r, a, b);
  return r;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string QPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[n];
    if (n > 0) os << '*' << var << '^' << n;
  }
  return os.str();
}

// ---- BiPoly -----------------------------------------------------------------

BiPoly BiPoly::constant(const BigInt& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(std::size_t i, std::size_t j, const BigInt& c) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

BiPoly BiPoly::from_row(std::size_t i, QPoly row) {
  BiPoly p;
  p.add_row(i, row);
  return p;
}

const QPoly& BiPoly::row(std::size_t i) const { return i < rows_.size() ? rows_[i] : kZeroPoly; }

std::size_t BiPoly::q_degree_bound() const {
  std::size_t m = 0;
  for (const auto& r : rows_) m = std::max(m, r.size());
  return m;
}

std::size_t BiPoly::nonzero_terms() const {
  std::size_t n = 0;
  for_each_term([&](std::size_t, std::size_t, const BigInt&) { ++n; });
  return n;
}

void BiPoly::add_term(std::size_t i, std::size_t j, const BigInt& c) {
  if (c == 0) return;
  if (i >= rows_.size()) rows_.resize(i + 1);
  rows_[i].add_term(j, c);
  trim();
}

void BiPoly::add_row(std::size_t i, const QPoly& p) {
  if (p.is_zero()) return;
  if (i >= rows_.size()) rows_.resize(i + 1);
  rows_[i] += p;
  trim();
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.rows_.size() > rows_.size()) rows_.resize(other.rows_.size());
  for (std::size_t i = 0; i < other.rows_.size(); ++i) rows_[i] += other.rows_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.rows_.size() > rows_.size()) rows_.resize(other.rows_.size());
  for (std::size_t i = 0; i < other.rows_.size(); ++i) rows_[i] -= other.rows_[i];
  trim();
  return *this;
}

BiPoly BiPoly::shifted(std::size_t x_shift, std::size_t q_shift) const {
  if (is_zero()) return {};
  BiPoly r;
  r.rows_.resize(x_shift);
  for (const auto& row : rows_) r.rows_.push_back(row.shifted(q_shift));
  r.trim();
  return r;
}

void BiPoly::truncate_q(std::size_t max_power) {
  for (auto& r : rows_) r.truncate(max_power);
  trim();
}

void BiPoly::multiply_accumulate(BiPoly& acc, const BiPoly& a, const BiPoly& b, std::size_t q_shift,
                                 std::size_t q_cap) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t need = a.rows_.size() + b.rows_.size() - 1;
  if (acc.rows_.size() < need) acc.rows_.resize(need);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j)
      QPoly::multiply_accumulate(acc.rows_[i + j], a.rows_[i], b.rows_[j], q_shift, q_cap);
  }
  acc.trim();
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  BiPoly::multiply_accumulate(r, a, b);
  return r;
}

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

std::string BiPoly::to_string(char xvar, char qvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for_each_term([&](std::size_t i, std::size_t j, const BigInt& c) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (i > 0) os << '*' << xvar << '^' << i;
    if (j > 0) os << '*' << qvar << '^' << j;
  });
  return os.str();
}

// ---- BivariateSeries --------------------------------------------------------

BivariateSeries BivariateSeries::with_scaled_argument(std::size_t j) const {
  BivariateSeries r(max_order());
  for (std::size_t m = 0; m <= max_order(); ++m) r.orders_[m] = orders_[m].shifted(0, j * m);
  return r;
}

BivariateSeries BivariateSeries::truncated(std::size_t max_order) const {
  BivariateSeries r(max_order);
  for (std::size_t m = 0; m <= max_order && m < orders_.size(); ++m) r.orders_[m] = orders_[m];
  return r;
}

BivariateSeries BivariateSeries::multiply(const BivariateSeries& a, const BivariateSeries& b,
                                          std::size_t q_cap) {
  const std::size_t top = std::min(a.max_order(), b.max_order());
  BivariateSeries r(top);
  for (std::size_t m = 0; m <= top; ++m)
    for (std::size_t i = 0; i <= m; ++i)
      BiPoly::multiply_accumulate(r.orders_[m], a.orders_[i], b.orders_[m - i], 0, q_cap);
  return r;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  for (std::size_t m = 0; m <= std::min(max_order(), other.max_order()); ++m)
    orders_[m] += other.orders_[m];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  for (std::size_t m = 0; m <= std::min(max_order(), other.max_order()); ++m)
    orders_[m] -= other.orders_[m];
  return *this;
}

}  // namespace ddp
