#pragma once

#include "ddp/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace ddp::enumeration {

enum class Step : std::uint8_t { Up, Down, Jump };

struct Displacement {
  int dx;
  int dy;
};

constexpr Displacement displacement(Step s) noexcept {
  switch (s) {
    case Step::Up: return {0, 1};
    case Step::Down: return {1, 0};
    case Step::Jump: return {-1, 1};
  }
  return {0, 0};
}

char step_letter(Step s) noexcept;

struct Vertex {
  std::int64_t x;
  std::int64_t y;
};

// A deformed Dyck path. Construction does not validate; call validate() or
// rely on area_of_path, which validates first.
class DDPath {
 public:
  DDPath() = default;
  explicit DDPath(std::vector<Step> steps) : steps_(std::move(steps)) {}
  // Letters U, D, J.
  static DDPath parse(std::string_view letters);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::vector<Vertex> vertices() const;
  std::int64_t jumps() const;
  // #Up + #Jump; the path ends at (m, m).
  std::int64_t half_length() const;

  // Throws std::invalid_argument when y < x somewhere, the end is off the
  // diagonal, or #Down != #Up + 2·#Jump.
  void validate() const;

  std::string to_string() const;

 private:
  std::vector<Step> steps_;
};

// Area between the path and the diagonal in full cells: shoelace area minus
// (m + k)/2. Throws ConventionError if the result is negative or fractional.
std::int64_t area_of_path(const DDPath& path);

struct CountKey {
  std::int64_t k;  // jumps
  std::int64_t m;  // half-length
  std::int64_t n;  // area
  friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

// Exact counts p_{k,m,n} through half-length max_m. Zero entries are not stored.
class CountTable {
 public:
  explicit CountTable(std::int64_t max_m = 0) : max_m_(max_m) {}

  std::int64_t max_m() const noexcept { return max_m_; }
  const std::map<CountKey, BigInt>& entries() const noexcept { return entries_; }
  BigInt get(std::int64_t k, std::int64_t m, std::int64_t n) const;
  void add(std::int64_t k, std::int64_t m, std::int64_t n, const BigInt& count);

  static CountTable from_series(const BivariateSeries& series);
  BivariateSeries to_series() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::int64_t max_m_;
  std::map<CountKey, BigInt> entries_;
};

// Power-series solution of w t G(q²t)G(qt)G(t) + t G(qt)G(t) − G(t) + 1 = 0
// through t^max_m, in exact integers. Row index of each BiPoly is the power of w.
BivariateSeries series_from_funeq(std::size_t max_m);

// Left-hand side of the functional equation evaluated on a truncated series;
// zero through its order for the true solution.
BivariateSeries funeq_residual(const BivariateSeries& g);

inline constexpr std::int64_t kDefaultExplosionGuard = 8;

// All step sequences of half-length ≤ max_m, area computed geometrically.
// Throws std::invalid_argument if max_m exceeds the guard.
CountTable enumerate_bruteforce(std::int64_t max_m,
                                std::int64_t explosion_guard = kDefaultExplosionGuard);

// Calls visit(path) for every path of half-length exactly m.
template <class Visit>
void for_each_path(std::int64_t m, Visit&& visit);

struct QfibFuneqReport {
  std::vector<BiPoly> residuals;  // per t-order, exact
  std::optional<std::size_t> first_failing_order;
  bool ok() const noexcept { return !first_failing_order.has_value(); }
};

// Checks G(t) = Σ_k t^k q^C(k,2) F_k(w/t, 1/q) ∏_{l<k} G(q^l t) through t^max_m.
// Every term is polynomial after expansion, so the check is exact.
QfibFuneqReport check_qfib_funeq(const BivariateSeries& g, std::size_t max_m);

void write_counts_csv(std::ostream& os, const CountTable& table);

// ---- implementation --------------------------------------------------------

namespace detail {
template <class Visit>
void extend(std::vector<Step>& steps, std::int64_t x, std::int64_t y, std::int64_t m, Visit& visit) {
  if (x == m && y == m) {
    visit(DDPath(steps));
    return;
  }
  for (Step s : {Step::Up, Step::Down, Step::Jump}) {
    const auto d = displacement(s);
    const std::int64_t nx = x + d.dx, ny = y + d.dy;
    if (ny < nx || ny > m) continue;
    steps.push_back(s);
    extend(steps, nx, ny, m, visit);
    steps.pop_back();
  }
}
}  // namespace detail

template <class Visit>
void for_each_path(std::int64_t m, Visit&& visit) {
  std::vector<Step> steps;
  detail::extend(steps, 0, 0, m, visit);
}

}  // namespace ddp::enumeration
