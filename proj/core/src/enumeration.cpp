#include "ddp/enumeration.hpp"

#include "ddp/error.hpp"
#include "ddp/qseries.hpp"

#include <stdexcept>

namespace ddp::enumeration {

char step_letter(Step s) noexcept {
  switch (s) {
    case Step::Up: return 'U';
    case Step::Down: return 'D';
    case Step::Jump: return 'J';
  }
  return '?';
}

DDPath DDPath::parse(std::string_view letters) {
  std::vector<Step> steps;
  steps.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      case 'J': steps.push_back(Step::Jump); break;
      default: throw std::invalid_argument(std::string("unknown step letter '") + c + "'");
    }
  }
  return DDPath(std::move(steps));
}

std::vector<Vertex> DDPath::vertices() const {
  std::vector<Vertex> v;
  v.reserve(steps_.size() + 1);
  v.push_back({0, 0});
  for (Step s : steps_) {
    const auto d = displacement(s);
    v.push_back({v.back().x + d.dx, v.back().y + d.dy});
  }
  return v;
}

std::int64_t DDPath::jumps() const {
  std::int64_t k = 0;
  for (Step s : steps_) k += s == Step::Jump;
  return k;
}

std::int64_t DDPath::half_length() const {
  std::int64_t m = 0;
  for (Step s : steps_) m += s != Step::Down;
  return m;
}

void DDPath::validate() const {
  std::int64_t up = 0, down = 0, jump = 0;
  for (Step s : steps_) {
    up += s == Step::Up;
    down += s == Step::Down;
    jump += s == Step::Jump;
  }
  if (down != up + 2 * jump) throw std::invalid_argument("path " + to_string() + ": #D != #U + 2#J");
  const auto v = vertices();
  for (const auto& p : v)
    if (p.y < p.x) throw std::invalid_argument("path " + to_string() + " goes below the diagonal");
  if (v.back().x != v.back().y) throw std::invalid_argument("path " + to_string() + " ends off the diagonal");
}

std::string DDPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(step_letter(st));
  return s.empty() ? std::string("(empty)") : s;
}

std::int64_t area_of_path(const DDPath& path) {
  path.validate();
  const auto v = path.vertices();
  // Closing edge runs along the diagonal back to the origin and contributes 0.
  std::int64_t twice = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) twice += v[i].x * v[i + 1].y - v[i + 1].x * v[i].y;
  if (twice < 0) twice = -twice;
  const std::int64_t numer = twice - (path.half_length() + path.jumps());
  if (numer < 0 || numer % 2 != 0)
    throw ConventionError("area of " + path.to_string() + " is " + std::to_string(numer) +
                          "/2, not a nonnegative integer");
  return numer / 2;
}

// ---- CountTable -------------------------------------------------------------

BigInt CountTable::get(std::int64_t k, std::int64_t m, std::int64_t n) const {
  auto it = entries_.find({k, m, n});
  return it == entries_.end() ? BigInt(0) : it->second;
}

void CountTable::add(std::int64_t k, std::int64_t m, std::int64_t n, const BigInt& count) {
  if (count == 0) return;
  auto& e = entries_[{k, m, n}];
  e += count;
  if (e == 0) entries_.erase({k, m, n});
}

CountTable CountTable::from_series(const BivariateSeries& series) {
  CountTable t(static_cast<std::int64_t>(series.max_order()));
  for (std::size_t m = 0; m <= series.max_order(); ++m)
    series[m].for_each_term([&](std::size_t k, std::size_t n, const BigInt& c) {
      t.add(static_cast<std::int64_t>(k), static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), c);
    });
  return t;
}

BivariateSeries CountTable::to_series() const {
  BivariateSeries s(static_cast<std::size_t>(max_m_));
  for (const auto& [key, c] : entries_)
    if (key.m <= max_m_)
      s[static_cast<std::size_t>(key.m)].add_term(static_cast<std::size_t>(key.k),
                                                   static_cast<std::size_t>(key.n), c);
  return s;
}

// ---- functional equation ----------------------------------------------------

BivariateSeries series_from_funeq(std::size_t max_m) {
  BivariateSeries g(max_m);
  g[0] = BiPoly::constant(1);
  // a[i] = [t^i] G(qt)G(t), b[i] = [t^i] G(q²t)G(qt)G(t)
  std::vector<BiPoly> a, b;
  a.reserve(max_m);
  b.reserve(max_m);
  for (std::size_t m = 1; m <= max_m; ++m) {
    const std::size_t i = m - 1;
    BiPoly ai;
    for (std::size_t j = 0; j <= i; ++j) BiPoly::multiply_accumulate(ai, g[j], g[i - j], j);
    a.push_back(std::move(ai));
    BiPoly bi;
    for (std::size_t j = 0; j <= i; ++j) BiPoly::multiply_accumulate(bi, g[j], a[i - j], 2 * j);
    b.push_back(std::move(bi));
    g[m] = a[i] + b[i].shifted(1, 0);
  }
  return g;
}

BivariateSeries funeq_residual(const BivariateSeries& g) {
  const std::size_t M = g.max_order();
  const auto gq = g.with_scaled_argument(1);
  const auto gq2 = g.with_scaled_argument(2);
  const auto a = BivariateSeries::multiply(gq, g);
  const auto b = BivariateSeries::multiply(gq2, a);
  BivariateSeries r(M);
  r[0] = BiPoly::constant(1) - g[0];
  for (std::size_t m = 1; m <= M; ++m) r[m] = a[m - 1] + b[m - 1].shifted(1, 0) - g[m];
  return r;
}

// ---- brute force ------------------------------------------------------------

CountTable enumerate_bruteforce(std::int64_t max_m, std::int64_t explosion_guard) {
  if (max_m < 0) throw std::invalid_argument("max_m must be nonnegative");
  if (max_m > explosion_guard)
    throw std::invalid_argument("max_m=" + std::to_string(max_m) + " exceeds the brute-force guard " +
                                std::to_string(explosion_guard));
  CountTable table(max_m);
  for (std::int64_t m = 0; m <= max_m; ++m)
    for_each_path(m, [&](const DDPath& p) { table.add(p.jumps(), m, area_of_path(p), 1); });
  return table;
}

// ---- alternative functional equation ----------------------------------------

QfibFuneqReport check_qfib_funeq(const BivariateSeries& g, std::size_t max_m) {
  if (g.max_order() < max_m) throw std::invalid_argument("series shorter than the requested order");
  const auto G = g.truncated(max_m);

  BivariateSeries rhs(max_m);
  BivariateSeries prod(max_m);  // ∏_{l<k} G(q^l t)
  prod[0] = BiPoly::constant(1);
  // The t-power of the (k, l) term is k − l ≥ k/2, so k ≤ 2·max_m suffices.
  for (std::size_t k = 0; k <= 2 * max_m; ++k) {
    if (k > 0) prod = BivariateSeries::multiply(prod, G.with_scaled_argument(k - 1));
    const BiPoly fk = qseries::qfibonacci(k);
    const std::size_t binom = k * (k - 1) / 2;
    fk.for_each_term([&](std::size_t l, std::size_t j, const BigInt& c) {
      const std::size_t tpow = k - l;
      if (tpow > max_m) return;
      if (j > binom) throw std::logic_error("negative q power in the q-Fibonacci expansion");
      // w^l t^{k−l} q^{C(k,2)−j} · prod
      const BiPoly coeff = BiPoly::monomial(l, binom - j, c);
      for (std::size_t m = tpow; m <= max_m; ++m)
        BiPoly::multiply_accumulate(rhs[m], coeff, prod[m - tpow]);
    });
  }

  QfibFuneqReport report;
  report.residuals.resize(max_m + 1);
  for (std::size_t m = 0; m <= max_m; ++m) {
    report.residuals[m] = G[m] - rhs[m];
    if (!report.residuals[m].is_zero() && !report.first_failing_order) report.first_failing_order = m;
  }
  return report;
}

void write_counts_csv(std::ostream& os, const CountTable& table) {
  os << "k,m,n,count\n";
  // CSV rows ordered by (m, k, n).
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, const BigInt*> ordered;
  for (const auto& [key, c] : table.entries()) ordered[{key.m, key.k, key.n}] = &c;
  for (const auto& [key, c] : ordered)
    os << std::get<1>(key) << ',' << std::get<0>(key) << ',' << std::get<2>(key) << ',' << *c << '\n';
}

}  // namespace ddp::enumeration
