#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "tori/newton.hpp"
#include "tori/series.hpp"

using namespace tori;

namespace {

using QSeries = Series<RationalField>;
const RationalField QQ;

QSeries poly(std::vector<Rat> c) { return QSeries::polynomial(QQ, std::move(c)); }

QSeries one_plus_t(long trunc) { return QSeries(QQ, {Rat(1), Rat(1)}, trunc); }

std::multiset<Rat> slope_multiset(const NewtonPolygon& np) {
  std::multiset<Rat> out;
  for (const auto& s : np.slopes)
    for (long i = 0; i < s.length; ++i) out.insert(s.lambda);
  return out;
}

}  // namespace

TEST(SeriesArith, ProductOfBinomials) {
  auto a = poly({1, 1}), b = poly({1, -1});
  auto c = mul(a, b);
  EXPECT_TRUE(c.exact());
  EXPECT_TRUE(series_equal(c, poly({1, 0, -1})));
}

TEST(SeriesArith, IdentityComposition) {
  auto a = poly({0, 1, 1});
  EXPECT_TRUE(series_equal(compose(a, poly({0, 1})), a));
  try {
    compose(a, poly({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ComposeNonzeroConstant);
  }
}

TEST(SeriesArith, ExponentialTimesInverse) {
  const long M = 30;
  std::vector<Rat> e(M + 1), f(M + 1);
  Rat fact = 1;
  for (long i = 0; i <= M; ++i) {
    if (i > 0) fact *= i;
    e[i] = 1 / fact;
    f[i] = (i % 2 ? -1 : 1) / fact;
  }
  auto prod = mul(QSeries(QQ, e, M), QSeries(QQ, f, M));
  EXPECT_EQ(prod.trunc(), M);
  EXPECT_EQ(prod.coeff(0), 1);
  for (long i = 1; i <= M; ++i) EXPECT_EQ(prod.coeff(i), 0) << i;
}

TEST(SeriesArith, TruncationNeverExtends) {
  auto a = QSeries(QQ, {1, 2, 3}, 5);
  auto b = QSeries(QQ, {1, 1}, 3);
  EXPECT_EQ(add(a, b).trunc(), 3);
  EXPECT_EQ(mul(a, b).trunc(), 3);
  EXPECT_EQ(mul(a, poly({1, 1})).trunc(), 5);
}

TEST(FormalLog, LogOnePlusT) {
  auto l = formal_log(one_plus_t(12));
  for (long i = 1; i <= 12; ++i) EXPECT_EQ(l.coeff(i), Rat(i % 2 ? 1 : -1, i));
  EXPECT_EQ(l.coeff(0), 0);
  auto l2 = formal_log(mul(one_plus_t(12), one_plus_t(12)));
  for (long i = 1; i <= 12; ++i) EXPECT_EQ(l2.coeff(i), 2 * l.coeff(i));
}

TEST(FormalLog, ValuationsOfLogOnePlusFiveT) {
  auto l = formal_log(QSeries(QQ, {Rat(1), Rat(5)}, 60));
  for (long i = 1; i <= 60; ++i) EXPECT_EQ(valuation(l.coeff(i), 5), i - valuation(Int(i), 5));
}

TEST(FormalLog, RejectsBadConstantTerm) {
  try {
    formal_log(QSeries(QQ, {Rat(2), Rat(1)}, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConstantTermNotUnit);
  }
}

TEST(FormalLog, PadicUnitConstantTerm) {
  auto ctx = make_context(5, 6);
  PadicRing R{ctx};
  Series<PadicRing> s(R, {R.from_int(6), R.one()}, 10);
  auto l = formal_log(s);
  EXPECT_TRUE(l.coeff(0).equals(log_unit(R.from_int(6))));
  // d/dT log(6 + T) = 1/(6 + T), so coefficient n is (-1)^(n+1) / (n 6^n).
  for (long n = 1; n <= 10; ++n) {
    Rat expect = Rat(n % 2 ? 1 : -1) / (Rat(n) * Rat(ipow(6, n)));
    EXPECT_TRUE(l.coeff(n).equals(R.from_rational(expect))) << n;
  }
}

TEST(FormalLog, HomomorphismOnOneUnits) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> a(8), b(8);
    a[0] = b[0] = 1;
    for (int i = 1; i < 8; ++i) {
      a[i] = Rat(dist(rng));
      b[i] = Rat(dist(rng), 3);
      b[i].canonicalize();
    }
    auto sa = QSeries(QQ, a, 15), sb = QSeries(QQ, b, 15);
    EXPECT_TRUE(series_equal(formal_log(mul(sa, sb)), add(formal_log(sa), formal_log(sb))));
  }
}

TEST(NewtonPolygon, LogSeriesAtFive) {
  auto np = newton_polygon(formal_log(one_plus_t(626)), Int(5));
  std::vector<HullVertex> expect{{1, 0}, {5, -1}, {25, -2}, {125, -3}, {625, -4}};
  EXPECT_EQ(np.vertices, expect);
  auto neg = negative_slopes(np);
  ASSERT_EQ(neg.size(), 4u);
  for (long i = 1; i <= 4; ++i) {
    long len = to_long(ipow(5, i) - ipow(5, i - 1));
    EXPECT_EQ(neg[i - 1].first, Rat(1, len));
    EXPECT_EQ(neg[i - 1].second, len);
  }
  EXPECT_EQ(zero_count(np, Rat(1, 4), Rat(1, 4)), 4);
  EXPECT_EQ(zero_count(np, Rat(1), Rat(2)), 0);
}

TEST(NewtonPolygon, ConstantSeries) {
  auto np = newton_polygon(poly({Rat(50)}), Int(5));
  ASSERT_EQ(np.vertices.size(), 1u);
  EXPECT_EQ(np.vertices[0], (HullVertex{0, 2}));
  EXPECT_TRUE(negative_slopes(np).empty());
}

TEST(NewtonPolygon, QuadraticWithTwoRootValuations) {
  auto np = newton_polygon(poly({125, -30, 1}), Int(5));
  std::vector<HullVertex> expect{{0, 3}, {1, 1}, {2, 0}};
  EXPECT_EQ(np.vertices, expect);
  auto neg = negative_slopes(np);
  ASSERT_EQ(neg.size(), 2u);
  EXPECT_EQ(neg[0], std::make_pair(Rat(2), 1L));
  EXPECT_EQ(neg[1], std::make_pair(Rat(1), 1L));
}

TEST(NewtonPolygon, ZeroCountOnThreeFactors) {
  auto f = mul(mul(poly({-3, 1}), poly({-12, 1})), poly({-18, 1}));  // roots 3, 12, 18 at p = 3 -> valuations 1, 1, 2
  auto np = newton_polygon(f, Int(3));
  EXPECT_EQ(zero_count(np, 1, 1), 2);
  EXPECT_EQ(zero_count(np, 2, 2), 1);
  EXPECT_EQ(zero_count(np, 5, 7), 0);
}

TEST(NewtonPolygon, ZeroSeriesIsRejected) {
  try {
    newton_polygon(QSeries(QQ, {0, 0}, 4), Int(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroSeries);
  }
}

TEST(NewtonPolygonProperty, SlopesAreRootValuations) {
  std::mt19937_64 rng(2024);
  const long primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 1000; ++trial) {
    long p = primes[trial % 4];
    int deg = 1 + static_cast<int>(rng() % 8);
    QSeries f = poly({1});
    std::multiset<Rat> expect;
    for (int i = 0; i < deg; ++i) {
      long v = static_cast<long>(rng() % 7) - 2;
      long u = 1 + static_cast<long>(rng() % 50);
      if (u % p == 0) ++u;
      if (rng() % 2) u = -u;
      Rat root = Rat(u) * (v >= 0 ? Rat(ipow(p, v)) : Rat(1, 1) / Rat(ipow(p, -v)));
      root.canonicalize();
      f = mul(f, poly({-root, 1}));
      expect.insert(Rat(v));
    }
    auto np = newton_polygon(f, Int(p));
    EXPECT_EQ(slope_multiset(np), expect);
    // Hull validity.
    for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
      const auto& a = np.vertices[i];
      const auto& b = np.vertices[i + 1];
      if (i + 2 < np.vertices.size()) EXPECT_GT(np.slopes[i].lambda, np.slopes[i + 1].lambda);
      for (long n = a.index; n <= b.index; ++n) {
        if (f.coeff(n) == 0) continue;
        Rat line = a.value + (b.value - a.value) * Rat(n - a.index, b.index - a.index);
        EXPECT_GE(Rat(valuation(f.coeff(n), Int(p))), line);
      }
    }
  }
}

TEST(NewtonPolygonProperty, Multiplicativity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-60, 60);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> a(1 + rng() % 6), b(1 + rng() % 6);
    for (auto& c : a) c = Rat(dist(rng));
    for (auto& c : b) c = Rat(dist(rng));
    a.back() = a.back() == 0 ? 1 : a.back();
    b.back() = b.back() == 0 ? 1 : b.back();
    if (a[0] == 0) a[0] = 3;
    if (b[0] == 0) b[0] = 9;
    auto fa = poly(a), fb = poly(b);
    auto ma = slope_multiset(newton_polygon(fa, Int(3)));
    auto mb = slope_multiset(newton_polygon(fb, Int(3)));
    ma.insert(mb.begin(), mb.end());
    EXPECT_EQ(slope_multiset(newton_polygon(mul(fa, fb), Int(3))), ma);
  }
}
