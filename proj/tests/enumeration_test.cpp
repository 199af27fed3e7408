#include "ddp/enumeration.hpp"
#include "ddp/error.hpp"
#include "ddp/qseries.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace ddp;
using namespace ddp::enumeration;

namespace {

std::vector<std::int64_t> areas_of(std::int64_t k, std::int64_t m) {
  std::vector<std::int64_t> out;
  for_each_path(m, [&](const DDPath& p) {
    if (p.jumps() == k) out.push_back(area_of_path(p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Path, ParseAndInvariants) {
  const auto p = DDPath::parse("UJDDD");
  EXPECT_EQ(p.jumps(), 1);
  EXPECT_EQ(p.half_length(), 2);
  EXPECT_EQ(p.to_string(), "UJDDD");
  EXPECT_NO_THROW(p.validate());
  const auto v = p.vertices();
  EXPECT_EQ(v.back().x, 2);
  EXPECT_EQ(v.back().y, 2);
  EXPECT_THROW(DDPath::parse("DU").validate(), std::invalid_argument);
  EXPECT_THROW(DDPath::parse("UUD").validate(), std::invalid_argument);
  EXPECT_THROW(DDPath::parse("UXD"), std::invalid_argument);
}

TEST(Path, JumpMayTakeXNegative) {
  const auto p = DDPath::parse("JDD");
  EXPECT_EQ(p.vertices()[1].x, -1);
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(area_of_path(p), 0);
}

TEST(Area, SmallExamples) {
  EXPECT_EQ(area_of_path(DDPath::parse("UD")), 0);
  EXPECT_EQ(area_of_path(DDPath::parse("UUDD")), 1);
  EXPECT_EQ(area_of_path(DDPath::parse("UJDDD")), 1);
  EXPECT_EQ(area_of_path(DDPath::parse("UUUDDD")), 3);
}

TEST(Area, OneJumpHalfLengthTwo) {
  EXPECT_EQ(areas_of(1, 2), (std::vector<std::int64_t>{0, 0, 1, 1, 2}));
}

TEST(Series, LowOrders) {
  const auto g = series_from_funeq(3);
  EXPECT_EQ(g[0], BiPoly::constant(1));
  BiPoly g1 = BiPoly::constant(1);
  g1.add_term(1, 0, 1);
  EXPECT_EQ(g[1], g1);
  // (1+q) + w(2+2q+q²) + w²(1+q+q²)
  EXPECT_EQ(g[2].row(0), QPoly({1, 1}));
  EXPECT_EQ(g[2].row(1), QPoly({2, 2, 1}));
  EXPECT_EQ(g[2].row(2), QPoly({1, 1, 1}));
  // q-Catalan at m = 3
  EXPECT_EQ(g[3].row(0), QPoly({1, 2, 1, 1}));
}

TEST(Series, FunctionalEquationResidualVanishes) {
  const auto g = series_from_funeq(7);
  const auto r = funeq_residual(g);
  for (std::size_t m = 0; m <= r.max_order(); ++m) EXPECT_TRUE(r[m].is_zero()) << "order " << m;
}

TEST(Series, MatchesBruteForce) {
  for (std::int64_t m = 0; m <= 6; ++m)
    EXPECT_EQ(CountTable::from_series(series_from_funeq(static_cast<std::size_t>(m))), enumerate_bruteforce(m))
        << "max_m " << m;
}

TEST(Series, BruteForceSmallTables) {
  const auto t1 = enumerate_bruteforce(1);
  EXPECT_EQ(t1.entries().size(), 3u);
  EXPECT_EQ(t1.get(0, 0, 0), 1);
  EXPECT_EQ(t1.get(0, 1, 0), 1);
  EXPECT_EQ(t1.get(1, 1, 0), 1);
  EXPECT_EQ(enumerate_bruteforce(0).entries().size(), 1u);
}

TEST(Series, CatalanAtQOneWZero) {
  const auto g = series_from_funeq(10);
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (std::size_t m = 0; m <= 10; ++m) {
    BigInt sum = 0;
    for (const auto& c : g[m].row(0).coeffs()) sum += c;
    EXPECT_EQ(sum, catalan[m]) << m;
  }
}

TEST(Series, QZeroKeepsOnlyFlatPaths) {
  const auto g = series_from_funeq(8);
  for (std::size_t m = 0; m <= 8; ++m)
    for (std::size_t k = 0; k <= m; ++k) {
      // 1/(1 − (1+w)t): coefficient C(m, k)
      BigInt binom = 1;
      for (std::size_t i = 0; i < k; ++i) binom = binom * (m - i) / (i + 1);
      EXPECT_EQ(g[m].coeff(k, 0), binom);
    }
}

TEST(Series, NonNegativeAndJumpBound) {
  const auto t = CountTable::from_series(series_from_funeq(8));
  for (const auto& [key, c] : t.entries()) {
    EXPECT_GT(c, 0);
    EXPECT_LE(key.k, key.m);
  }
}

TEST(Series, PhiRatioAgreesBeyondBruteForceRange) {
  EXPECT_EQ(CountTable::from_series(qseries::phi_ratio_series(9)), CountTable::from_series(series_from_funeq(9)));
}

TEST(Series, AlternativeFunctionalEquation) {
  EXPECT_TRUE(check_qfib_funeq(series_from_funeq(0), 0).ok());
  EXPECT_TRUE(check_qfib_funeq(series_from_funeq(8), 8).ok());
  // A wrong series is caught at the first perturbed order.
  auto g = series_from_funeq(5);
  g[3].add_term(1, 1, 1);
  const auto r = check_qfib_funeq(g, 5);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.first_failing_order, 3u);
}

TEST(BruteForce, ExplosionGuard) {
  EXPECT_THROW(enumerate_bruteforce(9), std::invalid_argument);
  EXPECT_THROW(enumerate_bruteforce(-1), std::invalid_argument);
}

TEST(CountTable, RoundTripsThroughSeries) {
  const auto t = enumerate_bruteforce(5);
  EXPECT_EQ(CountTable::from_series(t.to_series()), t);
}

TEST(CountTable, CsvLayout) {
  std::ostringstream os;
  write_counts_csv(os, enumerate_bruteforce(1));
  EXPECT_EQ(os.str(), "k,m,n,count\n0,0,0,1\n0,1,0,1\n1,1,0,1\n");
}
